import { describe, expect, it } from "vitest";

import { boardSpan, renderBoard, stripRow } from "../src/board.js";

/** Just enough Document for renderBoard; no DOM runtime in this sandbox. */
class StubElement {
  children: StubElement[] = [];
  attrs: Record<string, string> = {};
  listeners: Record<string, () => void> = {};
  className = "";
  textContent = "";
  constructor(readonly tagName: string) {}

  appendChild(child: StubElement): StubElement {
    this.children.push(child);
    return child;
  }

  replaceChildren(...nodes: StubElement[]): void {
    this.children = [...nodes];
  }

  setAttribute(name: string, value: string): void {
    this.attrs[name] = value;
  }

  addEventListener(type: string, handler: () => void): void {
    this.listeners[type] = handler;
  }
}

const stubDocument = () =>
  ({ createElement: (tag: string) => new StubElement(tag) }) as unknown as Document;

describe("stripRow", () => {
  it("marks occupied squares", () => {
    expect(stripRow([0, 2], 4)).toEqual([
      { square: 0, coin: true },
      { square: 1, coin: false },
      { square: 2, coin: true },
      { square: 3, coin: false },
    ]);
  });

  it("handles empty strips", () => {
    expect(stripRow([], 2)).toEqual([
      { square: 0, coin: false },
      { square: 1, coin: false },
    ]);
  });
});

describe("boardSpan", () => {
  it("covers the highest coin with headroom", () => {
    expect(boardSpan({ left: [0, 1], right: [1, 9] })).toBe(12);
  });

  it("never collapses below the minimum", () => {
    expect(boardSpan({ left: [], right: [] })).toBe(8);
    expect(boardSpan({ left: [0], right: [] })).toBe(8);
  });
});

describe("renderBoard", () => {
  it("draws both strips with coins in place", () => {
    const doc = stubDocument();
    const mount = new StubElement("section");
    renderBoard(doc, mount as unknown as Element, { left: [0, 1], right: [1, 2] });

    expect(mount.children).toHaveLength(1);
    const board = mount.children[0]!;
    expect(board.className).toBe("board");
    expect(board.children.map((strip) => strip.className)).toEqual([
      "strip left",
      "strip right",
    ]);

    const [leftStrip, rightStrip] = board.children;
    const squares = (strip: StubElement) => strip.children.slice(1); // after the label
    expect(squares(leftStrip!)).toHaveLength(8);
    expect(squares(leftStrip!).map((cell) => cell.className.includes("coin"))).toEqual([
      true, true, false, false, false, false, false, false,
    ]);
    expect(squares(rightStrip!).map((cell) => cell.className.includes("coin"))).toEqual([
      false, true, true, false, false, false, false, false,
    ]);
    const cell = squares(leftStrip!)[3]!;
    expect(cell.tagName).toBe("button");
    expect(cell.attrs["data-strap"]).toBe("left");
    expect(cell.attrs["data-square"]).toBe("3");
    expect(cell.textContent).toBe("3");
    expect(squares(leftStrip!)[0]!.textContent).toBe("●");
  });

  it("routes clicks with strip and square", () => {
    const doc = stubDocument();
    const mount = new StubElement("section");
    const clicks: Array<[string, number]> = [];
    renderBoard(doc, mount as unknown as Element, { left: [], right: [3] }, (strap, square) =>
      clicks.push([strap, square]),
    );
    const board = mount.children[0]!;
    const rightStrip = board.children[1]!;
    rightStrip.children[4]!.listeners["click"]!(); // square 3 (after the label)
    expect(clicks).toEqual([["right", 3]]);
  });

  it("replaces previous renders instead of stacking them", () => {
    const doc = stubDocument();
    const mount = new StubElement("section");
    renderBoard(doc, mount as unknown as Element, { left: [0], right: [] });
    renderBoard(doc, mount as unknown as Element, { left: [1], right: [] });
    expect(mount.children).toHaveLength(1);
  });
});
