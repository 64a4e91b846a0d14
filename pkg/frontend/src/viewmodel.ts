/**
 * Client view state: the latest server snapshot plus short-lived
 * decorations derived from output events.
 *
 * The view model never owns window geometry. Every pane position it can
 * report came from a server snapshot; events only add transient overlays
 * (limit badges, selection flashes, transition notices) that expire on
 * the client's logical clock.
 */

import { LimitFeedbackEvent, OutputEvent, Snapshot } from "./protocol.js";

export const BADGE_TTL_MS = 1500;
export const FLASH_TTL_MS = 1000;

export type Tool =
  | "pointer"
  | "lasso"
  | "chord_move"
  | "chord_resize"
  | "display_resize"
  | "mode_setter"
  | "unobscure";

export interface LimitBadge {
  window: number;
  limited: string[];
  expiresAt: number;
}

export interface SelectionFlash {
  window: number;
  part: string;
  expiresAt: number;
}

export interface TransitionNotice {
  window: number;
  to: string;
  expiresAt: number;
}

export class ViewModel {
  tool: Tool = "pointer";
  private snapshot: Snapshot | null = null;
  private snapshotRaw: string | null = null;
  private badges: LimitBadge[] = [];
  private flashes: SelectionFlash[] = [];
  private notices: TransitionNotice[] = [];

  applySnapshot(snapshot: Snapshot, raw: string): void {
    this.snapshot = snapshot;
    this.snapshotRaw = raw;
  }

  applyEvent(event: OutputEvent, atClock: number): void {
    if (event.event === "limit_feedback") {
      const feedback = event as LimitFeedbackEvent;
      this.badges.push({
        window: feedback.window,
        limited: feedback.limited,
        expiresAt: atClock + BADGE_TTL_MS,
      });
    } else if (event.event === "border_selected") {
      this.flashes.push({
        window: event.window as number,
        part: event.part as string,
        expiresAt: atClock + FLASH_TTL_MS,
      });
    } else if (event.event === "visibility_transition") {
      this.notices.push({
        window: event.window as number,
        to: event.to as string,
        expiresAt: atClock + FLASH_TTL_MS,
      });
    }
  }

  get current(): Snapshot | null {
    return this.snapshot;
  }

  get currentRaw(): string | null {
    return this.snapshotRaw;
  }

  activeBadges(atClock: number): LimitBadge[] {
    this.badges = this.badges.filter((b) => b.expiresAt > atClock);
    return [...this.badges];
  }

  activeFlashes(atClock: number): SelectionFlash[] {
    this.flashes = this.flashes.filter((f) => f.expiresAt > atClock);
    return [...this.flashes];
  }

  activeNotices(atClock: number): TransitionNotice[] {
    this.notices = this.notices.filter((n) => n.expiresAt > atClock);
    return [...this.notices];
  }
}
