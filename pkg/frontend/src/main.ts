/** Page wiring: forms in, session events out. */

import {
  ApiClient,
  ApiError,
  Move,
  Position,
  Strap,
  Variant,
  formatMove,
  formatPosition,
  parsePosition,
} from "./api.js";
import { renderBoard } from "./board.js";
import { GameSession, SessionEvent } from "./session.js";

function must<T extends Element>(id: string): T {
  const el = document.getElementById(id);
  if (!el) throw new Error(`missing element #${id}`);
  return el as unknown as T;
}

const boardEl = must<HTMLElement>("board");
const statusEl = must<HTMLElement>("status");
const analysisEl = must<HTMLElement>("analysis");
const messageEl = must<HTMLElement>("message");
const logEl = must<HTMLUListElement>("log");
const startForm = must<HTMLFormElement>("start-form");
const moveForm = must<HTMLFormElement>("move-form");
const kindSelect = must<HTMLSelectElement>("move-kind");

const client = new ApiClient("");
let session: GameSession | null = null;
let variant: Variant = "A";
let selected: { strap: Strap; square: number } | null = null;

function eventText(event: SessionEvent): string {
  switch (event.kind) {
    case "human":
      return `you: ${formatMove(event.move)} → ${formatPosition(event.position)}`;
    case "engine":
      return `engine: ${formatMove(event.move)} → ${formatPosition(event.position)}`;
    case "over":
      return event.winner === "human" ? "Game over: you win!" : "Game over: engine wins.";
  }
}

function coinLabel(position: Position, strap: Strap, square: number): "left" | "right" | "lone" {
  const coins = strap === "left" ? position.left : position.right;
  if (coins.length === 1) return "lone";
  return square === coins[0] ? "left" : "right";
}

function onSquareClick(strap: Strap, square: number): void {
  if (!session || session.turn !== "human") return;
  const coins = strap === "left" ? session.position.left : session.position.right;
  if (coins.includes(square)) {
    selected = { strap, square };
    setMessage(`selected ${strap} coin on ${square}; click an empty square to slide`);
    return;
  }
  if (!selected || selected.strap !== strap) return;
  const coin = coinLabel(session.position, strap, selected.square);
  selected = null;
  void submitMove({ strap, kind: "slide", coin, to: square });
}

function setMessage(text: string): void {
  messageEl.textContent = text;
}

async function render(): Promise<void> {
  if (!session) return;
  renderBoard(document, boardEl, session.position, onSquareClick);
  statusEl.textContent =
    session.turn === "over"
      ? `position ${formatPosition(session.position)}`
      : `position ${formatPosition(session.position)}, ${session.turn} to move`;
  logEl.replaceChildren(
    ...session.events.map((event) => {
      const item = document.createElement("li");
      item.textContent = eventText(event);
      return item;
    }),
  );
  if (session.turn === "over") {
    analysisEl.textContent = "";
    return;
  }
  try {
    const analysis = await client.analyze(session.position, variant);
    const plural = analysis.winningMoves.length === 1 ? "" : "s";
    analysisEl.textContent =
      `nim-sum ${analysis.nimSum}, ${analysis.outcome}-position, ` +
      `${analysis.winningMoves.length} winning move${plural}`;
  } catch {
    analysisEl.textContent = "";
  }
}

async function submitMove(move: Move): Promise<void> {
  if (!session) return;
  setMessage("");
  try {
    await session.humanMove(move);
  } catch (err) {
    if (err instanceof ApiError) {
      setMessage(`${err.code}: ${err.message}`);
    } else {
      setMessage(String(err));
    }
  }
  await render();
}

function readMoveForm(): Move {
  const strap = must<HTMLSelectElement>("move-strap").value as Strap;
  const kind = kindSelect.value;
  if (kind === "slide") {
    const coin = must<HTMLSelectElement>("move-coin").value as "left" | "right" | "lone";
    const to = Number(must<HTMLInputElement>("move-to").value);
    return { strap, kind: "slide", coin, to };
  }
  if (kind === "push") {
    const depth = Number(must<HTMLInputElement>("move-depth").value);
    return { strap, kind: "push", depth };
  }
  return { strap, kind: "remove" };
}

function syncMoveFields(): void {
  const kind = kindSelect.value;
  must<HTMLElement>("slide-fields").hidden = kind !== "slide";
  must<HTMLElement>("push-fields").hidden = kind !== "push";
}

async function newGame(): Promise<void> {
  setMessage("");
  let start: Position;
  try {
    start = parsePosition(must<HTMLInputElement>("start-position").value);
  } catch (err) {
    setMessage(String(err));
    return;
  }
  variant = must<HTMLSelectElement>("start-variant").value as Variant;
  const engineFirst = must<HTMLSelectElement>("start-first").value === "engine";
  session = new GameSession(client, start, variant);
  selected = null;
  try {
    await session.start(engineFirst);
  } catch (err) {
    setMessage(err instanceof ApiError ? `${err.code}: ${err.message}` : String(err));
    session = null;
    return;
  }
  await render();
}

startForm.addEventListener("submit", (event) => {
  event.preventDefault();
  void newGame();
});

moveForm.addEventListener("submit", (event) => {
  event.preventDefault();
  void submitMove(readMoveForm());
});

kindSelect.addEventListener("change", syncMoveFields);

syncMoveFields();
void newGame();
