/**
 * Bridge protocol types and codecs.
 *
 * The client speaks exactly the engine's newline-delimited JSON protocol:
 * outbound lines are trace records, inbound lines are output events or
 * `{"snapshot":{...}}` wrappers. Snapshot payloads are kept as raw line
 * slices, never re-serialized, so byte-for-byte comparisons against the
 * headless replayer stay meaningful.
 */

export interface ComponentSpec {
  name: string;
  w: number;
  h: number;
  required: boolean;
  priority: number;
}

export type Anchor = "fixed" | "proportional";
export type EdgeName =
  | "left"
  | "right"
  | "top"
  | "bottom"
  | "top_left"
  | "top_right"
  | "bottom_left"
  | "bottom_right";
export type Strategy = "move_away" | "disappear" | "reduce" | "auto";
export type ModeName = "normal" | "timed" | "locked" | "timed_icon";

export type TraceRecord =
  | {
      t: number;
      kind: "create";
      min_w: number;
      min_h: number;
      max_w: number;
      max_h: number;
      x: number;
      y: number;
      w: number;
      h: number;
      anchor: Anchor;
      components: ComponentSpec[];
    }
  | { t: number; kind: "destroy"; id: number }
  | { t: number; kind: "pointer"; x: number; y: number }
  | { t: number; kind: "button"; action: "both_down" | "both_up" }
  | { t: number; kind: "key"; combo: string }
  | { t: number; kind: "display"; w: number; h: number }
  | { t: number; kind: "set_mode"; id: number; mode: ModeName; t_show?: number }
  | { t: number; kind: "expose"; id: number }
  | { t: number; kind: "resize"; id: number; edge: EdgeName; dx: number; dy: number }
  | {
      t: number;
      kind: "unobscure";
      target: number;
      protected: number;
      strategy: Strategy;
    }
  | { t: number; kind: "begin_action" }
  | { t: number; kind: "end_action"; id: number }
  | { t: number; kind: "tick" }
  | { t: number; kind: "snapshot" };

export type WindowStateName = "exposed" | "invisible" | "icon" | "hidden_for_action";

export interface WindowSnap {
  id: number;
  rect: [number, number, number, number];
  z: number;
  state: WindowStateName;
  mode: string;
  components_visible: number;
}

export interface Snapshot {
  clock: number;
  display: [number, number];
  windows: WindowSnap[];
  input: string;
}

export interface OutputEvent {
  t: number;
  event: string;
  [key: string]: unknown;
}

export interface LimitFeedbackEvent extends OutputEvent {
  event: "limit_feedback";
  window: number;
  limited: string[];
}

/** Serialize a trace record as one protocol line (no trailing newline). */
export function encodeRecord(record: TraceRecord): string {
  return JSON.stringify(record);
}

const SNAPSHOT_PREFIX = '{"snapshot":';

export type ServerMessage =
  | { type: "snapshot"; raw: string; snapshot: Snapshot }
  | { type: "event"; event: OutputEvent };

/** Decode one inbound line, preserving snapshot bytes exactly. */
export function decodeServerLine(line: string): ServerMessage {
  if (line.startsWith(SNAPSHOT_PREFIX) && line.endsWith("}")) {
    const raw = line.slice(SNAPSHOT_PREFIX.length, -1);
    return { type: "snapshot", raw, snapshot: JSON.parse(raw) as Snapshot };
  }
  const event = JSON.parse(line) as OutputEvent;
  if (typeof event.event !== "string") {
    throw new Error(`not a protocol message: ${line}`);
  }
  return { type: "event", event };
}

/** Parse a window mode string such as "timed:1000". */
export function parseMode(mode: string): { kind: ModeName; tShow?: number } {
  const sep = mode.indexOf(":");
  if (sep < 0) {
    return { kind: mode as ModeName };
  }
  return {
    kind: mode.slice(0, sep) as ModeName,
    tShow: Number(mode.slice(sep + 1)),
  };
}
