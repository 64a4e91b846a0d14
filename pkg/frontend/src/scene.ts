/**
 * Turn a snapshot plus active decorations into an ordered list of draw
 * operations.
 *
 * The scene is renderer-agnostic: panes come out bottom-to-top in z
 * order, iconified windows sit at the tray slots the engine assigned,
 * invisible windows appear as ghost slots continuing the tray row, and
 * locked windows carry a pin marker. Limit badges attach to the edge the
 * violated limit constrains: width limits on the right edge, height
 * limits on the bottom edge.
 */

import { Snapshot, WindowSnap, parseMode } from "./protocol.js";
import { LimitBadge, SelectionFlash } from "./viewmodel.js";

export const TRAY_SLOT = 64;

export type SceneOp =
  | { op: "desk"; w: number; h: number }
  | {
      op: "pane";
      id: number;
      x: number;
      y: number;
      w: number;
      h: number;
      z: number;
      locked: boolean;
      mode: string;
      componentsVisible: number;
    }
  | { op: "tray_icon"; id: number; x: number; y: number; w: number; h: number }
  | { op: "tray_ghost"; id: number; x: number; y: number; w: number; h: number }
  | { op: "pin"; id: number; x: number; y: number }
  | {
      op: "badge";
      id: number;
      edge: "right" | "bottom";
      label: string;
      x: number;
      y: number;
    }
  | { op: "flash"; id: number; part: string };

export interface Decorations {
  badges?: LimitBadge[];
  flashes?: SelectionFlash[];
}

function badgeOps(window: WindowSnap, badge: LimitBadge): SceneOp[] {
  const [x, y, w, h] = window.rect;
  const ops: SceneOp[] = [];
  for (const label of badge.limited) {
    if (label === "max_width" || label === "min_width") {
      ops.push({ op: "badge", id: window.id, edge: "right", label, x: x + w, y: y + Math.floor(h / 2) });
    } else {
      ops.push({ op: "badge", id: window.id, edge: "bottom", label, x: x + Math.floor(w / 2), y: y + h });
    }
  }
  return ops;
}

export function render(snapshot: Snapshot, decorations: Decorations = {}): SceneOp[] {
  const ops: SceneOp[] = [{ op: "desk", w: snapshot.display[0], h: snapshot.display[1] }];
  const byId = new Map(snapshot.windows.map((w) => [w.id, w]));

  const exposed = snapshot.windows
    .filter((w) => w.state === "exposed")
    .sort((a, b) => a.z - b.z);
  for (const window of exposed) {
    const [x, y, w, h] = window.rect;
    const locked = parseMode(window.mode).kind === "locked";
    ops.push({
      op: "pane",
      id: window.id,
      x, y, w, h,
      z: window.z,
      locked,
      mode: window.mode,
      componentsVisible: window.components_visible,
    });
    if (locked) {
      ops.push({ op: "pin", id: window.id, x: x + w - 12, y: y + 4 });
    }
  }

  const icons = snapshot.windows
    .filter((w) => w.state === "icon")
    .sort((a, b) => a.id - b.id);
  for (const window of icons) {
    const [x, y, w, h] = window.rect;
    ops.push({ op: "tray_icon", id: window.id, x, y, w, h });
  }

  // Invisible windows ghost into the tray row after the engine's icons.
  const ghosts = snapshot.windows
    .filter((w) => w.state === "invisible")
    .sort((a, b) => a.id - b.id);
  const trayY = Math.max(0, snapshot.display[1] - TRAY_SLOT);
  ghosts.forEach((window, i) => {
    ops.push({
      op: "tray_ghost",
      id: window.id,
      x: (icons.length + i) * TRAY_SLOT,
      y: trayY,
      w: TRAY_SLOT,
      h: TRAY_SLOT,
    });
  });

  for (const badge of decorations.badges ?? []) {
    const window = byId.get(badge.window);
    if (window && window.state === "exposed") {
      ops.push(...badgeOps(window, badge));
    }
  }
  for (const flash of decorations.flashes ?? []) {
    if (byId.has(flash.window)) {
      ops.push({ op: "flash", id: flash.window, part: flash.part });
    }
  }
  return ops;
}
