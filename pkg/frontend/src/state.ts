/** Designer state plumbing: shareable URL hash, debounce, latest-wins fetch. */

import type { ConfigMirror } from './config.js';
import { defaultConfig } from './config.js';

export interface DesignerState {
  config: ConfigMirror;
  /** light canvas evaluates against L*=100, dark against L*=0 */
  theme: 'light' | 'dark';
}

export function initialState(): DesignerState {
  return { config: defaultConfig(), theme: 'light' };
}

export function backgroundL(state: DesignerState): number {
  return state.theme === 'light' ? 100 : 0;
}

/** Encode the full state into a URL hash; replaying it reproduces the view. */
export function encodeHash(state: DesignerState): string {
  return '#' + encodeURIComponent(JSON.stringify(state));
}

export function decodeHash(hash: string): DesignerState | null {
  if (!hash.startsWith('#')) return null;
  try {
    const doc = JSON.parse(decodeURIComponent(hash.slice(1)));
    if (!doc || typeof doc !== 'object' || !doc.config) return null;
    const base = initialState();
    return {
      config: { ...base.config, ...doc.config },
      theme: doc.theme === 'dark' ? 'dark' : 'light',
    };
  } catch {
    return null;
  }
}

/** Trailing-edge debounce for slider edits. */
export function debounce<A extends unknown[]>(
  fn: (...args: A) => void,
  waitMs: number,
): (...args: A) => void {
  let timer: ReturnType<typeof setTimeout> | undefined;
  return (...args: A) => {
    if (timer !== undefined) clearTimeout(timer);
    timer = setTimeout(() => fn(...args), waitMs);
  };
}

/** Latest-wins wrapper: an in-flight request is superseded by a newer edit.
 * Superseded calls resolve to null and abort their fetch when possible. */
export function latestOnly<A extends unknown[], R>(
  fn: (signal: AbortSignal, ...args: A) => Promise<R>,
): (...args: A) => Promise<R | null> {
  let generation = 0;
  let controller: AbortController | null = null;
  return async (...args: A) => {
    const mine = ++generation;
    controller?.abort();
    controller = new AbortController();
    try {
      const result = await fn(controller.signal, ...args);
      return mine === generation ? result : null;
    } catch (err) {
      if (mine !== generation) return null; // superseded, swallow
      throw err;
    }
  };
}
