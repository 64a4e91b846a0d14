/** Paint a scene onto a 2D canvas context. Pure presentation. */

import { SceneOp } from "./scene.js";
import { parseMode } from "./protocol.js";

const COLORS = {
  desk: "#1e2430",
  paneFill: "rgba(86, 105, 140, 0.85)",
  paneLocked: "rgb(142, 98, 56)", // opaque: locked contents never blend away
  paneBorder: "#d7dce6",
  title: "#2c3648",
  badge: "#e4574f",
  ghost: "rgba(150, 160, 180, 0.35)",
  icon: "#4f80a8",
  text: "#f2f4f8",
  flash: "#ffd75e",
};

export function paint(ctx: CanvasRenderingContext2D, scene: SceneOp[]): void {
  for (const op of scene) {
    switch (op.op) {
      case "desk":
        ctx.canvas.width = op.w;
        ctx.canvas.height = op.h;
        ctx.fillStyle = COLORS.desk;
        ctx.fillRect(0, 0, op.w, op.h);
        break;
      case "pane": {
        ctx.fillStyle = op.locked ? COLORS.paneLocked : COLORS.paneFill;
        ctx.fillRect(op.x, op.y, op.w, op.h);
        ctx.fillStyle = COLORS.title;
        ctx.fillRect(op.x, op.y, op.w, 20);
        ctx.strokeStyle = COLORS.paneBorder;
        ctx.lineWidth = 2;
        ctx.strokeRect(op.x + 1, op.y + 1, op.w - 2, op.h - 2);
        ctx.fillStyle = COLORS.text;
        ctx.font = "12px sans-serif";
        const mode = parseMode(op.mode).kind;
        const tag = mode === "normal" ? "" : ` [${mode}]`;
        ctx.fillText(`#${op.id}${tag} (${op.componentsVisible})`, op.x + 6, op.y + 14);
        break;
      }
      case "pin":
        ctx.fillStyle = COLORS.text;
        ctx.font = "12px sans-serif";
        ctx.fillText("⊙", op.x, op.y + 10); // pinned marker
        break;
      case "tray_icon":
        ctx.fillStyle = COLORS.icon;
        ctx.fillRect(op.x + 4, op.y + 4, op.w - 8, op.h - 8);
        ctx.fillStyle = COLORS.text;
        ctx.font = "11px sans-serif";
        ctx.fillText(`#${op.id}`, op.x + 8, op.y + op.h / 2);
        break;
      case "tray_ghost":
        ctx.fillStyle = COLORS.ghost;
        ctx.fillRect(op.x + 4, op.y + 4, op.w - 8, op.h - 8);
        ctx.strokeStyle = COLORS.paneBorder;
        ctx.setLineDash([3, 3]);
        ctx.strokeRect(op.x + 4, op.y + 4, op.w - 8, op.h - 8);
        ctx.setLineDash([]);
        ctx.fillStyle = COLORS.text;
        ctx.font = "11px sans-serif";
        ctx.fillText(`#${op.id}`, op.x + 8, op.y + op.h / 2);
        break;
      case "badge": {
        ctx.fillStyle = COLORS.badge;
        ctx.beginPath();
        ctx.arc(op.x, op.y, 9, 0, Math.PI * 2);
        ctx.fill();
        ctx.fillStyle = COLORS.text;
        ctx.font = "bold 11px sans-serif";
        ctx.fillText("!", op.x - 2, op.y + 4);
        break;
      }
      case "flash":
        // Selection flashes are drawn as a note in the corner; the pane
        // itself is server state and may already have moved on.
        ctx.fillStyle = COLORS.flash;
        ctx.font = "12px sans-serif";
        ctx.fillText(`border selected: #${op.id} ${op.part}`, 8, 16);
        break;
    }
  }
}
