/** Editable mirror of the server's palette configuration.
 *
 * The mirror always serializes to a valid request config; widget bounds are
 * enforced here so every slider edit stays sendable.
 */

import type { ServerConfig } from './api.js';

export interface ConfigMirror {
  hueStart: number;
  hueWidth: number;
  hueFraction: number;
  splitMode: 'even' | 'proportional';
  permute: 'none' | 'interleave' | 'seeded';
  seed: number;
  interpolationMode: 'global' | 'local';
  luminanceTop: number;
  luminanceLeaf: number;
  chromaTop: number;
  chromaLeaf: number;
  excludedSlices: Array<[number, number]>;
}

export const BOUNDS = {
  hueFraction: { min: 0.01, max: 1 },
  luminance: { min: 0, max: 100 },
  chroma: { min: 0, max: 120 },
} as const;

export function defaultConfig(): ConfigMirror {
  return {
    hueStart: 0,
    hueWidth: 360,
    hueFraction: 0.9,
    splitMode: 'even',
    permute: 'interleave',
    seed: 0,
    interpolationMode: 'global',
    luminanceTop: 95,
    luminanceLeaf: 57,
    chromaTop: 10,
    chromaLeaf: 45,
    excludedSlices: [],
  };
}

const clamp = (v: number, min: number, max: number) =>
  Math.min(max, Math.max(min, v));

/** Apply one widget edit, clamped to its bounds. */
export function editParameter(
  state: ConfigMirror,
  name: keyof ConfigMirror,
  value: ConfigMirror[keyof ConfigMirror],
): ConfigMirror {
  const next = { ...state, [name]: value } as ConfigMirror;
  next.hueFraction = clamp(
    next.hueFraction,
    BOUNDS.hueFraction.min,
    BOUNDS.hueFraction.max,
  );
  next.luminanceTop = clamp(next.luminanceTop, BOUNDS.luminance.min, BOUNDS.luminance.max);
  next.luminanceLeaf = clamp(next.luminanceLeaf, BOUNDS.luminance.min, BOUNDS.luminance.max);
  next.chromaTop = clamp(next.chromaTop, BOUNDS.chroma.min, BOUNDS.chroma.max);
  next.chromaLeaf = clamp(next.chromaLeaf, BOUNDS.chroma.min, BOUNDS.chroma.max);
  next.seed = Math.round(next.seed);
  return next;
}

/** Serialize for POST /api/palette and for the exported CLI config file. */
export function toRequestConfig(state: ConfigMirror): Record<string, unknown> {
  return {
    hue_range: { start: state.hueStart, width: state.hueWidth },
    hue_fraction: state.hueFraction,
    split_mode: state.splitMode,
    permute: state.permute,
    seed: state.seed,
    interpolation_mode: state.interpolationMode,
    luminance_interval: [state.luminanceTop, state.luminanceLeaf],
    chroma_interval: [state.chromaTop, state.chromaLeaf],
    excluded_slices: state.excludedSlices,
  };
}

/** The downloadable config: byte-stable JSON the CLI accepts unchanged. */
export function exportConfigJson(state: ConfigMirror): string {
  return JSON.stringify(toRequestConfig(state), null, 2) + '\n';
}

/** Adopt a server-sent preset configuration (sliders jump to its values). */
export function fromServerConfig(config: ServerConfig): ConfigMirror {
  return {
    hueStart: config.hue_range.start,
    hueWidth: config.hue_range.width,
    hueFraction: config.hue_fraction,
    splitMode: config.split_mode,
    permute: config.permute,
    seed: config.seed,
    interpolationMode: config.interpolation_mode,
    luminanceTop: config.luminance_interval[0],
    luminanceLeaf: config.luminance_interval[1],
    chromaTop: config.chroma_interval[0],
    chromaLeaf: config.chroma_interval[1],
    excludedSlices: config.excluded_slices.map(([a, b]) => [a, b]),
  };
}
