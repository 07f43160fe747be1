/** Human-versus-engine game session.
 *
 * Drives one game over the API: the human submits moves, the engine
 * answers, and the session records every intermediate position exactly
 * as the service returned it.  Game over is detected by asking the
 * (stateless) service whether the side to move has any legal move; the
 * session itself knows nothing about the rules.
 */

import { ApiClient, ApiError, Move, Position, Variant } from "./api.js";

export type Turn = "human" | "engine" | "over";

export type SessionEvent =
  | { kind: "human"; move: Move; position: Position }
  | { kind: "engine"; move: Move; position: Position; nimSumAfter: number }
  | { kind: "over"; winner: "human" | "engine" };

export class GameSession {
  position: Position;
  turn: Turn = "human";
  winner: "human" | "engine" | null = null;
  readonly events: SessionEvent[] = [];

  constructor(
    private readonly client: ApiClient,
    start: Position,
    private readonly variant?: Variant,
  ) {
    this.position = start;
  }

  /** Begin play; with engineFirst the engine moves immediately. */
  async start(engineFirst = false): Promise<void> {
    if (engineFirst) {
      this.turn = "engine";
      await this.engineTurn();
    } else {
      await this.checkForLoss("engine");
    }
  }

  /** Submit the human's move.
   *
   * An illegal or malformed move raises ApiError and changes nothing;
   * a legal one is applied and the engine answers before this resolves.
   */
  async humanMove(move: Move): Promise<void> {
    if (this.turn !== "human") throw new Error(`not the human's turn (${this.turn})`);
    this.position = await this.client.apply(this.position, move, this.variant);
    this.events.push({ kind: "human", move, position: this.position });
    this.turn = "engine";
    await this.engineTurn();
  }

  private async engineTurn(): Promise<void> {
    let reply;
    try {
      reply = await this.client.engineMove(this.position, this.variant);
    } catch (err) {
      if (err instanceof ApiError && err.code === "game-over") {
        this.finish("human");
        return;
      }
      throw err;
    }
    this.position = reply.position;
    this.events.push({
      kind: "engine",
      move: reply.move,
      position: reply.position,
      nimSumAfter: reply.rationale.nimSumAfter,
    });
    this.turn = "human";
    await this.checkForLoss("engine");
  }

  /** After handing the turn over, see whether the mover is already out of moves. */
  private async checkForLoss(winnerIfStuck: "human" | "engine"): Promise<void> {
    if (!(await this.client.anyMoveAvailable(this.position, this.variant))) {
      this.finish(winnerIfStuck);
    }
  }

  private finish(winner: "human" | "engine"): void {
    this.turn = "over";
    this.winner = winner;
    this.events.push({ kind: "over", winner });
  }
}
