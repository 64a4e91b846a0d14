/**
 * Map user gestures 1:1 to trace records.
 *
 * Every helper stamps the client's logical clock, so the records it
 * returns can be sent live and appended to the session log unchanged.
 * Nothing here touches window geometry: the records describe intent, the
 * engine decides the outcome.
 */

import { LogicalClock } from "./clock.js";
import {
  Anchor,
  ComponentSpec,
  EdgeName,
  ModeName,
  Strategy,
  TraceRecord,
} from "./protocol.js";

const DEFAULT_COMPONENTS: ComponentSpec[] = [
  { name: "ok", w: 40, h: 20, required: true, priority: 1 },
];

export interface CreateSpec {
  x: number;
  y: number;
  w: number;
  h: number;
  minW?: number;
  minH?: number;
  maxW?: number;
  maxH?: number;
  anchor?: Anchor;
  components?: ComponentSpec[];
}

export class GestureMapper {
  constructor(private readonly clock: LogicalClock) {}

  private get t(): number {
    return this.clock.now();
  }

  pointerMove(x: number, y: number): TraceRecord {
    return { t: this.t, kind: "pointer", x: Math.round(x), y: Math.round(y) };
  }

  /** Chord-move: press both buttons over a window, drag, release. */
  chordMoveStart(x: number, y: number): TraceRecord[] {
    return [this.pointerMove(x, y), { t: this.t, kind: "button", action: "both_down" }];
  }

  chordDrag(x: number, y: number): TraceRecord[] {
    return [this.pointerMove(x, y)];
  }

  chordMoveEnd(): TraceRecord[] {
    return [{ t: this.t, kind: "button", action: "both_up" }];
  }

  /** Chord-resize: the resize combo grabs the corner nearest the pointer. */
  chordResizeStart(x: number, y: number): TraceRecord[] {
    return [this.pointerMove(x, y), { t: this.t, kind: "key", combo: "resize" }];
  }

  chordResizeEnd(): TraceRecord[] {
    return [{ t: this.t, kind: "key", combo: "escape" }];
  }

  /** Lasso samples are plain pointer records; the engine spots the loop. */
  lassoSample(x: number, y: number): TraceRecord {
    return this.pointerMove(x, y);
  }

  cancelModes(): TraceRecord {
    return { t: this.t, kind: "key", combo: "escape" };
  }

  createWindow(spec: CreateSpec): TraceRecord {
    return {
      t: this.t,
      kind: "create",
      min_w: spec.minW ?? 44,
      min_h: spec.minH ?? 44,
      max_w: spec.maxW ?? 4000,
      max_h: spec.maxH ?? 4000,
      x: spec.x,
      y: spec.y,
      w: spec.w,
      h: spec.h,
      anchor: spec.anchor ?? "fixed",
      components: spec.components ?? DEFAULT_COMPONENTS,
    };
  }

  destroyWindow(id: number): TraceRecord {
    return { t: this.t, kind: "destroy", id };
  }

  resizeBorder(id: number, edge: EdgeName, dx: number, dy: number): TraceRecord {
    return { t: this.t, kind: "resize", id, edge, dx: Math.round(dx), dy: Math.round(dy) };
  }

  setMode(id: number, mode: ModeName, tShow?: number): TraceRecord {
    if (mode === "timed" || mode === "timed_icon") {
      return { t: this.t, kind: "set_mode", id, mode, t_show: tShow ?? 1000 };
    }
    return { t: this.t, kind: "set_mode", id, mode };
  }

  exposeWindow(id: number): TraceRecord {
    return { t: this.t, kind: "expose", id };
  }

  displayResize(w: number, h: number): TraceRecord {
    return { t: this.t, kind: "display", w: Math.round(w), h: Math.round(h) };
  }

  unobscure(target: number, protectedId: number, strategy: Strategy): TraceRecord {
    return { t: this.t, kind: "unobscure", target, protected: protectedId, strategy };
  }

  beginAction(): TraceRecord {
    return { t: this.t, kind: "begin_action" };
  }

  endAction(id: number): TraceRecord {
    return { t: this.t, kind: "end_action", id };
  }

  tick(): TraceRecord {
    return { t: this.t, kind: "tick" };
  }

  requestSnapshot(): TraceRecord {
    return { t: this.t, kind: "snapshot" };
  }
}
