/** Browser WebSocket transport (frames relayed verbatim to the TCP bridge). */

import { BufferedSender, Transport } from "./transport.js";

export class WebSocketTransport implements Transport {
  private ws: WebSocket;
  private sender: BufferedSender;
  private lineHandlers: Array<(line: string) => void> = [];
  private stateHandlers: Array<(connected: boolean) => void> = [];

  constructor(url: string) {
    this.ws = new WebSocket(url);
    this.sender = new BufferedSender((line) => this.ws.send(line));
    this.ws.onopen = () => this.setState(true);
    this.ws.onclose = () => this.setState(false);
    this.ws.onmessage = (msg) => {
      const line = String(msg.data).trim();
      if (line.length > 0) {
        for (const handler of this.lineHandlers) {
          handler(line);
        }
      }
    };
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
    this.ws.close();
  }

  onLine(handler: (line: string) => void): void {
    this.lineHandlers.push(handler);
  }

  onStateChange(handler: (connected: boolean) => void): void {
    this.stateHandlers.push(handler);
  }
}
