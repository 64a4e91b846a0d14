/**
 * Client-side logical clock: a monotonic millisecond counter.
 *
 * The engine has no wall clock, so the client stamps records with its own
 * logical time. Interactive apps advance it from real elapsed time; tests
 * advance it explicitly. It never goes backwards.
 */
export class LogicalClock {
  private current = 0;

  now(): number {
    return this.current;
  }

  advance(ms: number): void {
    if (ms > 0) {
      this.current += Math.floor(ms);
    }
  }

  /** Advance to at least `ms` total elapsed time. */
  advanceTo(ms: number): void {
    const target = Math.floor(ms);
    if (target > this.current) {
      this.current = target;
    }
  }
}
