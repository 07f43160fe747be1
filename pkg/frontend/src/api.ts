/** Typed client for the coinslide JSON API.
 *
 * The service is stateless; every call carries the full position.  All
 * game knowledge lives server-side: this module never inspects a
 * position beyond serializing it, so the UI can't drift out of sync
 * with the rules.
 */

export interface Position {
  left: number[];
  right: number[];
}

export type Strap = "left" | "right";
export type Variant = "A" | "B";

export type Move =
  | { strap: Strap; kind: "slide"; coin: "left" | "right" | "lone"; to: number }
  | { strap: Strap; kind: "push"; depth: number }
  | { strap: Strap; kind: "remove" };

export type WinningMove = Move & { position: Position };

export interface Analysis {
  grundyLeft: number;
  grundyRight: number;
  nimSum: number;
  outcome: "N" | "P";
  winningMoves: WinningMove[];
}

export interface EngineReply {
  move: Move;
  position: Position;
  rationale: { nimSumBefore: number; nimSumAfter: number };
}

export interface Health {
  status: string;
  version: string;
}

/** Error body from the service, preserved with its machine code. */
export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    message: string,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
  constructor(
    private readonly baseUrl = "",
    private readonly fetchFn: FetchLike = (...args) => fetch(...args),
  ) {}

  async analyze(position: Position, variant?: Variant): Promise<Analysis> {
    return this.post("/api/analyze", { position, ...(variant && { variant }) });
  }

  async apply(position: Position, move: Move, variant?: Variant): Promise<Position> {
    const body = await this.post<{ position: Position }>("/api/apply", {
      position,
      move,
      ...(variant && { variant }),
    });
    return body.position;
  }

  async engineMove(position: Position, variant?: Variant): Promise<EngineReply> {
    return this.post("/api/engine-move", { position, ...(variant && { variant }) });
  }

  /** Whether the player to move has any legal move.
   *
   * The service is stateless, so asking it for an engine move is a pure
   * query; a "game-over" refusal means the side to move has lost.  The
   * computed move is discarded.
   */
  async anyMoveAvailable(position: Position, variant?: Variant): Promise<boolean> {
    try {
      await this.engineMove(position, variant);
      return true;
    } catch (err) {
      if (err instanceof ApiError && err.code === "game-over") return false;
      throw err;
    }
  }

  async health(): Promise<Health> {
    const response = await this.fetchFn(`${this.baseUrl}/api/health`);
    return this.decode(response);
  }

  private async post<T>(path: string, body: unknown): Promise<T> {
    const response = await this.fetchFn(`${this.baseUrl}${path}`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
    });
    return this.decode(response);
  }

  private async decode<T>(response: Response): Promise<T> {
    if (response.ok) return (await response.json()) as T;
    let code = "unknown";
    let message = `HTTP ${response.status}`;
    try {
      const body = (await response.json()) as { error?: { code?: string; message?: string } };
      if (body.error?.code) code = body.error.code;
      if (body.error?.message) message = body.error.message;
    } catch {
      // non-JSON error body; keep the fallback message
    }
    throw new ApiError(response.status, code, message);
  }
}

export function formatPosition(position: Position): string {
  const side = (coins: number[]) => (coins.length ? coins.join(",") : "-");
  return `${side(position.left)}|${side(position.right)}`;
}

export function parsePosition(text: string): Position {
  const parts = text.split("|");
  if (parts.length !== 2) throw new Error(`expected "<left>|<right>", got ${JSON.stringify(text)}`);
  const side = (part: string): number[] => {
    const trimmed = part.trim();
    if (trimmed === "-" || trimmed === "") return [];
    const coins = trimmed.split(",").map((token) => {
      const value = Number(token.trim());
      if (!Number.isInteger(value) || value < 0) {
        throw new Error(`bad square ${JSON.stringify(token)}`);
      }
      return value;
    });
    if (coins.length > 2) throw new Error("at most two coins per strip");
    return coins.sort((a, b) => a - b);
  };
  return { left: side(parts[0]!), right: side(parts[1]!) };
}

export function formatMove(move: Move): string {
  switch (move.kind) {
    case "slide":
      return `${move.strap} slide ${move.coin} ${move.to}`;
    case "push":
      return `${move.strap} push ${move.depth}`;
    case "remove":
      return `${move.strap} remove`;
  }
}
