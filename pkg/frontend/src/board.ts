/** Board rendering.
 *
 * Each strip is drawn from its own edge, so the right strip is laid out
 * right-to-left and the two edges face outward, matching the physical
 * game.  Mirroring is purely visual; square numbers sent to the API are
 * always edge-relative.
 */

import { Position, Strap } from "./api.js";

export interface SquareView {
  square: number;
  coin: boolean;
}

/** How many squares to draw per strip: everything in play plus headroom. */
export function boardSpan(position: Position, minSpan = 8): number {
  const highest = Math.max(-1, ...position.left, ...position.right);
  return Math.max(minSpan, highest + 3);
}

export function stripRow(coins: number[], span: number): SquareView[] {
  const occupied = new Set(coins);
  const row: SquareView[] = [];
  for (let square = 0; square < span; square += 1) {
    row.push({ square, coin: occupied.has(square) });
  }
  return row;
}

export type SquareClickHandler = (strap: Strap, square: number) => void;

export function renderBoard(
  doc: Document,
  mount: Element,
  position: Position,
  onClick?: SquareClickHandler,
): void {
  const span = boardSpan(position);
  const board = doc.createElement("div");
  board.className = "board";
  for (const strap of ["left", "right"] as const) {
    const coins = strap === "left" ? position.left : position.right;
    const strip = doc.createElement("div");
    strip.className = `strip ${strap}`;
    const label = doc.createElement("span");
    label.className = "strip-label";
    label.textContent = strap;
    strip.appendChild(label);
    for (const view of stripRow(coins, span)) {
      const cell = doc.createElement("button");
      cell.className = view.coin ? "square coin" : "square";
      cell.setAttribute("type", "button");
      cell.setAttribute("data-strap", strap);
      cell.setAttribute("data-square", String(view.square));
      cell.textContent = view.coin ? "●" : String(view.square);
      if (onClick) {
        cell.addEventListener("click", () => onClick(strap, view.square));
      }
      strip.appendChild(cell);
    }
    board.appendChild(strip);
  }
  mount.replaceChildren(board);
}
