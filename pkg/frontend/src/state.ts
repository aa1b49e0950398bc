// View state: up to two concurrent selections (s1/s2). Each brush kicks off
// one documents fetch and one frequencies fetch; responses are tagged with a
// sequence number and dropped if a newer brush superseded them, so linked
// views never mix data from different selections.

import type { ApiClient } from "./api.js";
import type { DocumentsResponse, FrequenciesResponse } from "./types.js";

export type Slot = 0 | 1;

export interface Selection {
  entryPointId: number;
  tokens: string[];
}

export interface SlotData {
  selection: Selection;
  documents: DocumentsResponse | null;
  frequencies: FrequenciesResponse | null;
  stale: boolean;
  error: string | null;
}

export type Listener = (slot: Slot, data: SlotData | null) => void;

export class ViewState {
  private slots: (SlotData | null)[] = [null, null];
  private seq: [number, number] = [0, 0];
  private listeners: Listener[] = [];
  /** Slot of the most recent brush; the document views follow it. */
  lastBrushed: Slot = 0;
  hoveredDocumentId: string | null = null;

  constructor(private api: ApiClient) {}

  onChange(listener: Listener): void {
    this.listeners.push(listener);
  }

  slot(slot: Slot): SlotData | null {
    return this.slots[slot];
  }

  selectionSlot(entryPointId: number): Slot | null {
    for (const slot of [0, 1] as Slot[]) {
      if (this.slots[slot]?.selection.entryPointId === entryPointId) {
        return slot;
      }
    }
    return null;
  }

  /** Choose where a brush lands: an existing slot for the same entry point
   * (idempotent re-brush), otherwise the first free slot, otherwise s2. */
  private targetSlot(entryPointId: number): Slot {
    const existing = this.selectionSlot(entryPointId);
    if (existing !== null) return existing;
    if (this.slots[0] === null) return 0;
    if (this.slots[1] === null) return 1;
    return 1;
  }

  async brush(selection: Selection): Promise<void> {
    const slot = this.targetSlot(selection.entryPointId);
    this.lastBrushed = slot;
    const ticket = ++this.seq[slot];
    const data: SlotData = {
      selection,
      documents: null,
      frequencies: null,
      stale: false,
      error: null,
    };
    this.slots[slot] = data;
    this.emit(slot);

    const current = () =>
      this.seq[slot] === ticket && this.slots[slot] === data;

    try {
      const [documents, frequencies] = await Promise.all([
        this.api.documents(selection.tokens),
        this.api.tokenFrequencies(selection.tokens),
      ]);
      if (!current()) return; // superseded by a newer brush
      data.documents = documents;
      data.frequencies = frequencies;
    } catch (err) {
      if (!current()) return;
      data.stale = true;
      data.error = err instanceof Error ? err.message : String(err);
    }
    this.emit(slot);
  }

  clear(slot: Slot): void {
    this.seq[slot]++;
    this.slots[slot] = null;
    this.emit(slot);
  }

  private emit(slot: Slot): void {
    for (const listener of this.listeners) {
      listener(slot, this.slots[slot]);
    }
  }
}
