/**
 * Line framing and send buffering for bridge connections.
 *
 * Transports deliver raw text chunks; `LineFramer` reassembles complete
 * newline-delimited messages across chunk boundaries. `BufferedSender`
 * queues outbound lines while the link is down and flushes them in order
 * on reconnect, so a session log never loses or reorders records.
 */

export interface Transport {
  send(line: string): void;
  close(): void;
  onLine(handler: (line: string) => void): void;
  onStateChange(handler: (connected: boolean) => void): void;
}

export class LineFramer {
  private buffer = "";

  /** Feed a chunk; returns every complete line it finished. */
  feed(chunk: string): string[] {
    this.buffer += chunk;
    const lines: string[] = [];
    for (;;) {
      const nl = this.buffer.indexOf("\n");
      if (nl < 0) {
        return lines;
      }
      const line = this.buffer.slice(0, nl).replace(/\r$/, "");
      this.buffer = this.buffer.slice(nl + 1);
      if (line.length > 0) {
        lines.push(line);
      }
    }
  }
}

export class BufferedSender {
  private queue: string[] = [];
  private connected = false;

  constructor(private readonly write: (line: string) => void) {}

  send(line: string): void {
    if (this.connected) {
      this.write(line);
    } else {
      this.queue.push(line);
    }
  }

  setConnected(connected: boolean): void {
    this.connected = connected;
    if (connected) {
      const pending = this.queue;
      this.queue = [];
      for (const line of pending) {
        this.write(line);
      }
    }
  }

  get pendingCount(): number {
    return this.queue.length;
  }
}
