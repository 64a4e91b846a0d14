/**
 * WebSocket-to-TCP relay for browser sessions.
 *
 * Browsers cannot open raw TCP sockets, so the playground page connects
 * here over ws:// and every text frame is piped verbatim to the engine
 * bridge (and back). The relay adds no protocol of its own: the browser
 * speaks exactly the bridge's newline-delimited records. It also serves
 * the static playground files over plain HTTP on the same port.
 *
 * Usage: node dist/relay.js [--port 8080] [--bridge 127.0.0.1:8137]
 */

import * as fs from "node:fs";
import * as http from "node:http";
import * as net from "node:net";
import * as path from "node:path";
import { fileURLToPath } from "node:url";

import { WebSocketServer, WebSocket } from "ws";

import { LineFramer } from "./transport.js";

const HERE = path.dirname(fileURLToPath(import.meta.url));
const STATIC_ROOT = path.resolve(HERE, "..");
const MIME: Record<string, string> = {
  ".html": "text/html; charset=utf-8",
  ".js": "text/javascript; charset=utf-8",
  ".map": "application/json",
  ".css": "text/css",
};

function parseArgs(argv: string[]): { port: number; bridgeHost: string; bridgePort: number } {
  let port = 8080;
  let bridge = "127.0.0.1:8137";
  for (let i = 0; i < argv.length; i += 1) {
    if (argv[i] === "--port") {
      port = Number(argv[++i]);
    } else if (argv[i] === "--bridge") {
      bridge = argv[++i];
    }
  }
  const [host, bridgePort] = bridge.split(":");
  return { port, bridgeHost: host, bridgePort: Number(bridgePort) };
}

function serveStatic(req: http.IncomingMessage, res: http.ServerResponse): void {
  const url = (req.url ?? "/").split("?")[0];
  const rel = url === "/" ? "index.html" : url.replace(/^\/+/, "");
  const file = path.resolve(STATIC_ROOT, rel);
  if (!file.startsWith(STATIC_ROOT) || !fs.existsSync(file) || fs.statSync(file).isDirectory()) {
    res.writeHead(404);
    res.end("not found");
    return;
  }
  res.writeHead(200, { "content-type": MIME[path.extname(file)] ?? "application/octet-stream" });
  res.end(fs.readFileSync(file));
}

export function startRelay(port: number, bridgeHost: string, bridgePort: number): http.Server {
  const server = http.createServer(serveStatic);
  const wss = new WebSocketServer({ server, path: "/bridge" });

  wss.on("connection", (ws: WebSocket) => {
    const upstream = net.createConnection({ host: bridgeHost, port: bridgePort });
    upstream.setEncoding("utf-8");
    const framer = new LineFramer();
    let pending: string[] = [];
    let ready = false;

    upstream.on("connect", () => {
      ready = true;
      for (const chunk of pending) {
        upstream.write(chunk);
      }
      pending = [];
    });
    upstream.on("data", (chunk: string) => {
      for (const line of framer.feed(chunk)) {
        ws.send(line);
      }
    });
    upstream.on("close", () => ws.close());
    upstream.on("error", () => ws.close());

    ws.on("message", (data) => {
      const text = data.toString() + "\n";
      if (ready) {
        upstream.write(text);
      } else {
        pending.push(text);
      }
    });
    ws.on("close", () => upstream.destroy());
  });

  server.listen(port, "127.0.0.1", () => {
    console.log(`playground on http://127.0.0.1:${port}/ (bridge ${bridgeHost}:${bridgePort})`);
  });
  return server;
}

const isMain =
  process.argv[1] !== undefined &&
  path.resolve(process.argv[1]) === fileURLToPath(import.meta.url);
if (isMain) {
  const args = parseArgs(process.argv.slice(2));
  startRelay(args.port, args.bridgeHost, args.bridgePort);
}
