/** Typed client for the palette service; the only place the UI gets colors. */

export interface ServerConfig {
  hue_range: { start: number; width: number };
  hue_fraction: number;
  split_mode: 'even' | 'proportional';
  permute: 'none' | 'interleave' | 'seeded';
  seed: number;
  interpolation_mode: 'global' | 'local';
  luminance_interval: [number, number];
  chroma_interval: [number, number];
  excluded_slices: Array<[number, number]>;
  recurse_on_shrunk_range: boolean;
}

export interface PaletteNode {
  path: string;
  depth: number;
  factor: number;
  hue: number;
  actual_hue: number;
  chroma: number;
  luminance: number;
  hex: string;
  in_gamut: boolean;
  clamped_hex: string;
  clamp_distance: number;
  range_start: number;
  range_width: number;
}

export interface PaletteResponse {
  palette: { config: ServerConfig; nodes: PaletteNode[] };
  metrics: Record<string, unknown>;
}

export interface PresetEntry {
  label: string;
  theme: string;
  size: string;
  focus: string;
  config: ServerConfig;
}

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    readonly detail: string,
  ) {
    super(`${code}: ${detail}`);
  }
}

export interface PaletteRequest {
  hierarchy: unknown;
  config?: Record<string, unknown>;
  preset?: string;
  background_l?: number;
}

export class PaletteApi {
  constructor(private readonly baseUrl: string) {}

  async requestPalette(
    body: PaletteRequest,
    signal?: AbortSignal,
  ): Promise<PaletteResponse> {
    const resp = await fetch(`${this.baseUrl}/api/palette`, {
      method: 'POST',
      headers: { 'content-type': 'application/json' },
      body: JSON.stringify(body),
      signal,
    });
    if (!resp.ok) {
      const doc = await resp.json().catch(() => ({}));
      throw new ApiError(
        resp.status,
        typeof doc.error === 'string' ? doc.error : 'E_UNKNOWN',
        typeof doc.detail === 'string' ? doc.detail : resp.statusText,
      );
    }
    return (await resp.json()) as PaletteResponse;
  }

  async presets(): Promise<PresetEntry[]> {
    const resp = await fetch(`${this.baseUrl}/api/presets`);
    if (!resp.ok) throw new ApiError(resp.status, 'E_UNKNOWN', resp.statusText);
    return (await resp.json()) as PresetEntry[];
  }

  async health(): Promise<boolean> {
    try {
      const resp = await fetch(`${this.baseUrl}/api/health`);
      return resp.ok && (await resp.json()) === 'ok';
    } catch {
      return false;
    }
  }
}
