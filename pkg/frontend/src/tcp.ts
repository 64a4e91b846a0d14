/** Node TCP transport for the bridge (used by tests and the relay). */

import * as net from "node:net";

import { LineFramer, BufferedSender, Transport } from "./transport.js";

export class TcpTransport implements Transport {
  private socket: net.Socket;
  private framer = new LineFramer();
  private sender: BufferedSender;
  private lineHandlers: Array<(line: string) => void> = [];
  private stateHandlers: Array<(connected: boolean) => void> = [];

  constructor(host: string, port: number) {
    this.socket = net.createConnection({ host, port });
    this.socket.setEncoding("utf-8");
    this.sender = new BufferedSender((line) => this.socket.write(line + "\n"));
    this.socket.on("connect", () => this.setState(true));
    this.socket.on("close", () => this.setState(false));
    this.socket.on("data", (chunk: string) => {
      for (const line of this.framer.feed(chunk)) {
        for (const handler of this.lineHandlers) {
          handler(line);
        }
      }
    });
  }

  private setState(connected: boolean): void {
    this.sender.setConnected(connected);
    for (const handler of this.stateHandlers) {
      handler(connected);
    }
  }

  send(line: string): void {
    this.sender.send(line);
  }

  close(): void {
    this.socket.end();
    this.socket.destroy();
  }

  onLine(handler: (line: string) => void): void {
    this.lineHandlers.push(handler);
  }

  onStateChange(handler: (connected: boolean) => void): void {
    this.stateHandlers.push(handler);
  }

  waitConnected(timeoutMs = 5000): Promise<void> {
    return new Promise((resolve, reject) => {
      if (!this.socket.connecting) {
        resolve();
        return;
      }
      const timer = setTimeout(
        () => reject(new Error("bridge connection timed out")),
        timeoutMs,
      );
      this.socket.once("connect", () => {
        clearTimeout(timer);
        resolve();
      });
      this.socket.once("error", (err) => {
        clearTimeout(timer);
        reject(err);
      });
    });
  }
}
