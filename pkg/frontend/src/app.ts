/**
 * Browser playground: a canvas over a live engine session.
 *
 * Tools map pointer gestures to trace records; every visual change the
 * user sees was round-tripped through the engine first. The session log
 * is downloadable and replays headlessly to the same final snapshot.
 */

import { LogicalClock } from "./clock.js";
import { GestureMapper } from "./gestures.js";
import { paint } from "./canvas.js";
import { render } from "./scene.js";
import { BridgeSession } from "./session.js";
import { TraceRecord, ModeName, Strategy } from "./protocol.js";
import { Tool, ViewModel } from "./viewmodel.js";
import { WebSocketTransport } from "./wsock.js";

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) {
    throw new Error(`missing #${id}`);
  }
  return node as T;
}

function main(): void {
  const canvas = el<HTMLCanvasElement>("desk");
  const ctx = canvas.getContext("2d");
  if (!ctx) {
    throw new Error("no 2d context");
  }

  const clock = new LogicalClock();
  const started = performance.now();
  const syncClock = () => clock.advanceTo(performance.now() - started);

  const transport = new WebSocketTransport(`ws://${location.host}/bridge`);
  const session = new BridgeSession(transport);
  const mapper = new GestureMapper(clock);
  const vm = new ViewModel();

  const repaint = () => {
    const snapshot = vm.current;
    if (snapshot) {
      paint(ctx, render(snapshot, {
        badges: vm.activeBadges(clock.now()),
        flashes: vm.activeFlashes(clock.now()),
      }));
    }
  };
  session.onSnapshot((snapshot, raw) => {
    vm.applySnapshot(snapshot, raw);
    repaint();
  });
  session.onEvent((event) => {
    vm.applyEvent(event, clock.now());
    repaint();
  });

  const send = (records: TraceRecord | TraceRecord[]) => {
    syncClock();
    for (const record of Array.isArray(records) ? records : [records]) {
      void session.send(record);
    }
  };

  // Periodic logical ticks let timed modes fire during idle viewing.
  window.setInterval(() => {
    syncClock();
    send(mapper.tick());
  }, 500);

  document.querySelectorAll<HTMLInputElement>("input[name=tool]").forEach((tool) => {
    tool.addEventListener("change", () => {
      vm.tool = tool.value as Tool;
    });
  });

  let dragging = false;
  const pos = (ev: MouseEvent): [number, number] => {
    const box = canvas.getBoundingClientRect();
    return [Math.round(ev.clientX - box.left), Math.round(ev.clientY - box.top)];
  };
  const hitWindow = (x: number, y: number): number | null => {
    const snapshot = vm.current;
    if (!snapshot) {
      return null;
    }
    const hits = snapshot.windows
      .filter((w) => w.state === "exposed")
      .filter((w) => {
        const [wx, wy, ww, wh] = w.rect;
        return wx <= x && x < wx + ww && wy <= y && y < wy + wh;
      });
    return hits.length ? hits.sort((a, b) => b.z - a.z)[0].id : null;
  };

  let unobscureTarget: number | null = null;

  canvas.addEventListener("mousedown", (ev) => {
    syncClock();
    const [x, y] = pos(ev);
    dragging = true;
    switch (vm.tool) {
      case "chord_move":
        send(mapper.chordMoveStart(x, y));
        break;
      case "chord_resize":
        send(mapper.chordResizeStart(x, y));
        break;
      case "lasso":
        send(mapper.lassoSample(x, y));
        break;
      case "pointer":
        send(mapper.pointerMove(x, y));
        break;
      case "mode_setter": {
        const id = hitWindow(x, y);
        if (id !== null) {
          const mode = el<HTMLSelectElement>("mode").value as ModeName;
          const tShow = Number(el<HTMLInputElement>("t_show").value) || 1000;
          send(mapper.setMode(id, mode, tShow));
        }
        break;
      }
      case "unobscure": {
        const id = hitWindow(x, y);
        if (id === null) {
          break;
        }
        if (unobscureTarget === null) {
          unobscureTarget = id;
        } else if (unobscureTarget !== id) {
          const strategy = el<HTMLSelectElement>("strategy").value as Strategy;
          send(mapper.unobscure(unobscureTarget, id, strategy));
          unobscureTarget = null;
        }
        break;
      }
      case "display_resize":
        break;
    }
  });

  canvas.addEventListener("mousemove", (ev) => {
    if (!dragging) {
      return;
    }
    syncClock();
    const [x, y] = pos(ev);
    if (vm.tool === "chord_move" || vm.tool === "chord_resize") {
      send(mapper.chordDrag(x, y));
    } else if (vm.tool === "lasso" || vm.tool === "pointer") {
      send(mapper.lassoSample(x, y));
    }
  });

  window.addEventListener("mouseup", () => {
    if (!dragging) {
      return;
    }
    dragging = false;
    syncClock();
    if (vm.tool === "chord_move") {
      send(mapper.chordMoveEnd());
    } else if (vm.tool === "chord_resize") {
      send(mapper.chordResizeEnd());
    }
  });

  el<HTMLButtonElement>("new_window").addEventListener("click", () => {
    send(
      mapper.createWindow({
        x: 40 + Math.floor(Math.random() * 200),
        y: 40 + Math.floor(Math.random() * 150),
        w: 220,
        h: 160,
        maxW: 500,
        maxH: 400,
      }),
    );
  });

  el<HTMLButtonElement>("shrink_display").addEventListener("click", () => {
    const snapshot = vm.current;
    const [w, h] = snapshot ? snapshot.display : [800, 600];
    send(mapper.displayResize(Math.max(200, Math.floor(w * 0.75)), Math.max(200, Math.floor(h * 0.75))));
  });

  el<HTMLButtonElement>("grow_display").addEventListener("click", () => {
    const snapshot = vm.current;
    const [w, h] = snapshot ? snapshot.display : [800, 600];
    send(mapper.displayResize(Math.floor(w * 1.25), Math.floor(h * 1.25)));
  });

  el<HTMLButtonElement>("download").addEventListener("click", () => {
    const blob = new Blob([session.sessionLog()], { type: "text/plain" });
    const link = document.createElement("a");
    link.href = URL.createObjectURL(blob);
    link.download = "session.trace";
    link.click();
    URL.revokeObjectURL(link.href);
  });

  canvas.addEventListener("dblclick", (ev) => {
    // Double-click a tray ghost or icon to expose it.
    syncClock();
    const [x, y] = pos(ev);
    const snapshot = vm.current;
    if (!snapshot) {
      return;
    }
    const trayY = snapshot.display[1] - 64;
    if (y >= trayY) {
      const icons = snapshot.windows
        .filter((w) => w.state === "icon")
        .sort((a, b) => a.id - b.id);
      const ghosts = snapshot.windows
        .filter((w) => w.state === "invisible")
        .sort((a, b) => a.id - b.id);
      const slot = Math.floor(x / 64);
      const entry = [...icons, ...ghosts][slot];
      if (entry) {
        send(mapper.exposeWindow(entry.id));
      }
    }
  });
}

main();
