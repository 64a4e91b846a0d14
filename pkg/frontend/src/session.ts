/**
 * A live bridge session: sends trace records, collects replies, and keeps
 * the downloadable session log.
 *
 * The server answers every record with zero or more output events followed
 * by one snapshot, so requests resolve strictly in send order. Every sent
 * record is appended verbatim to the log; replaying that log headlessly
 * reproduces the session.
 */

import {
  OutputEvent,
  Snapshot,
  TraceRecord,
  decodeServerLine,
  encodeRecord,
} from "./protocol.js";
import { Transport } from "./transport.js";

export interface RoundTrip {
  events: OutputEvent[];
  snapshot: Snapshot;
  snapshotRaw: string;
}

interface Pending {
  resolve: (rt: RoundTrip) => void;
  reject: (err: Error) => void;
  events: OutputEvent[];
}

export class BridgeSession {
  private log: string[] = [];
  private pending: Pending[] = [];
  private _lastSnapshot: Snapshot | null = null;
  private _lastSnapshotRaw: string | null = null;
  private eventHandlers: Array<(event: OutputEvent) => void> = [];
  private snapshotHandlers: Array<(snapshot: Snapshot, raw: string) => void> = [];

  constructor(private readonly transport: Transport) {
    transport.onLine((line) => this.onLine(line));
  }

  /** Send one record; resolves with the events and snapshot it produced. */
  send(record: TraceRecord): Promise<RoundTrip> {
    const line = encodeRecord(record);
    this.log.push(line);
    return new Promise<RoundTrip>((resolve, reject) => {
      this.pending.push({ resolve, reject, events: [] });
      this.transport.send(line);
    });
  }

  async sendAll(records: TraceRecord[]): Promise<RoundTrip> {
    let last: RoundTrip | null = null;
    for (const record of records) {
      last = await this.send(record);
    }
    if (last === null) {
      throw new Error("sendAll needs at least one record");
    }
    return last;
  }

  private onLine(line: string): void {
    const message = decodeServerLine(line);
    if (message.type === "event") {
      const head = this.pending[0];
      if (head) {
        head.events.push(message.event);
      }
      for (const handler of this.eventHandlers) {
        handler(message.event);
      }
      return;
    }
    this._lastSnapshot = message.snapshot;
    this._lastSnapshotRaw = message.raw;
    for (const handler of this.snapshotHandlers) {
      handler(message.snapshot, message.raw);
    }
    const head = this.pending.shift();
    if (head) {
      head.resolve({
        events: head.events,
        snapshot: message.snapshot,
        snapshotRaw: message.raw,
      });
    }
  }

  onEvent(handler: (event: OutputEvent) => void): void {
    this.eventHandlers.push(handler);
  }

  onSnapshot(handler: (snapshot: Snapshot, raw: string) => void): void {
    this.snapshotHandlers.push(handler);
  }

  get lastSnapshot(): Snapshot | null {
    return this._lastSnapshot;
  }

  get lastSnapshotRaw(): string | null {
    return this._lastSnapshotRaw;
  }

  /** The downloadable trace: one record per line, replayable headlessly. */
  sessionLog(): string {
    return this.log.map((line) => line + "\n").join("");
  }

  close(): void {
    this.transport.close();
    for (const head of this.pending) {
      head.reject(new Error("session closed"));
    }
    this.pending = [];
  }
}
