/** DOM wiring for the designer: the view is a pure function of the state. */

import { ApiError, PaletteApi, type PaletteResponse } from './api.js';
import {
  editParameter,
  exportConfigJson,
  fromServerConfig,
  toRequestConfig,
  type ConfigMirror,
} from './config.js';
import { metricRows } from './metricsPanel.js';
import {
  backgroundL,
  debounce,
  decodeHash,
  encodeHash,
  initialState,
  latestOnly,
  type DesignerState,
} from './state.js';
import { sunburstSvg } from './sunburst.js';
import { countNodes, parseTreeText, TreeParseError } from './tree.js';

const DEFAULT_TREE = `{"name": "root", "children": [
  {"name": "a", "children": [{"name": "a1"}]},
  {"name": "b", "children": [{"name": "b1"}, {"name": "b2"}]},
  {"name": "c", "children": [{"name": "c1"}, {"name": "c2"}, {"name": "c3"}]}
]}`;

const api = new PaletteApi('');
let state: DesignerState = decodeHash(location.hash) ?? initialState();
let treeText = DEFAULT_TREE;
let lastResponse: PaletteResponse | null = null;

const $ = <T extends HTMLElement>(id: string): T => {
  const el = document.getElementById(id);
  if (!el) throw new Error(`missing element #${id}`);
  return el as T;
};

const fetchPalette = latestOnly(async (signal) => {
  const hierarchy = parseTreeText(treeText);
  return api.requestPalette(
    {
      hierarchy,
      config: toRequestConfig(state.config),
      background_l: backgroundL(state),
    },
    signal,
  );
});

function showError(message: string | null): void {
  const banner = $('error');
  banner.textContent = message ?? '';
  banner.style.display = message ? 'block' : 'none';
}

function renderResponse(resp: PaletteResponse): void {
  lastResponse = resp;
  $('chart').innerHTML = sunburstSvg(resp.palette.nodes, 480);
  const swatches = resp.palette.nodes
    .map(
      (n) =>
        `<span class="swatch" style="background:${n.clamped_hex};` +
        `${n.in_gamut ? '' : 'outline:2px solid #ff2a2a;'}" title="${n.path}"></span>`,
    )
    .join('');
  $('swatches').innerHTML = swatches;
  $('metrics').innerHTML = metricRows(resp.metrics)
    .map(
      (r) =>
        `<tr><td>${r.label}</td><td>${r.value}</td>` +
        `<td class="hint">${r.hint}</td></tr>`,
    )
    .join('');
}

async function refresh(): Promise<void> {
  history.replaceState(null, '', encodeHash(state));
  document.body.dataset.theme = state.theme;
  try {
    const resp = await fetchPalette();
    if (resp === null) return; // superseded by a newer edit
    showError(null);
    renderResponse(resp);
  } catch (err) {
    // prior render is retained on purpose
    if (err instanceof TreeParseError) showError(`tree: ${err.message}`);
    else if (err instanceof ApiError) showError(err.message);
    else showError(String(err));
  }
}

const refreshSoon = debounce(refresh, 150);

function syncWidgets(): void {
  const c = state.config;
  ($('hue-fraction') as HTMLInputElement).value = String(c.hueFraction);
  ($('hue-fraction-value') as HTMLElement).textContent = c.hueFraction.toFixed(2);
  ($('split-mode') as HTMLSelectElement).value = c.splitMode;
  ($('interpolation-mode') as HTMLSelectElement).value = c.interpolationMode;
  ($('permute') as HTMLSelectElement).value = c.permute;
  ($('seed') as HTMLInputElement).value = String(c.seed);
  ($('lum-top') as HTMLInputElement).value = String(c.luminanceTop);
  ($('lum-leaf') as HTMLInputElement).value = String(c.luminanceLeaf);
  ($('chroma-top') as HTMLInputElement).value = String(c.chromaTop);
  ($('chroma-leaf') as HTMLInputElement).value = String(c.chromaLeaf);
  ($('theme') as HTMLSelectElement).value = state.theme;
  ($('excluded') as HTMLInputElement).value = c.excludedSlices
    .map(([a, b]) => `${a}-${b}`)
    .join(', ');
}

function onEdit(name: keyof ConfigMirror, value: ConfigMirror[keyof ConfigMirror]): void {
  state = { ...state, config: editParameter(state.config, name, value) };
  syncWidgets();
  refreshSoon();
}

function bind(): void {
  $('hue-fraction').addEventListener('input', (e) =>
    onEdit('hueFraction', Number((e.target as HTMLInputElement).value)),
  );
  $('split-mode').addEventListener('change', (e) =>
    onEdit('splitMode', (e.target as HTMLSelectElement).value as ConfigMirror['splitMode']),
  );
  $('interpolation-mode').addEventListener('change', (e) =>
    onEdit(
      'interpolationMode',
      (e.target as HTMLSelectElement).value as ConfigMirror['interpolationMode'],
    ),
  );
  $('permute').addEventListener('change', (e) =>
    onEdit('permute', (e.target as HTMLSelectElement).value as ConfigMirror['permute']),
  );
  $('seed').addEventListener('change', (e) =>
    onEdit('seed', Number((e.target as HTMLInputElement).value)),
  );
  $('lum-top').addEventListener('input', (e) =>
    onEdit('luminanceTop', Number((e.target as HTMLInputElement).value)),
  );
  $('lum-leaf').addEventListener('input', (e) =>
    onEdit('luminanceLeaf', Number((e.target as HTMLInputElement).value)),
  );
  $('chroma-top').addEventListener('input', (e) =>
    onEdit('chromaTop', Number((e.target as HTMLInputElement).value)),
  );
  $('chroma-leaf').addEventListener('input', (e) =>
    onEdit('chromaLeaf', Number((e.target as HTMLInputElement).value)),
  );
  $('excluded').addEventListener('change', (e) => {
    const text = (e.target as HTMLInputElement).value.trim();
    const slices: Array<[number, number]> = [];
    if (text !== '') {
      for (const part of text.split(',')) {
        const [a, b] = part.trim().split('-').map(Number);
        if (a === undefined || b === undefined || Number.isNaN(a) || Number.isNaN(b)) {
          showError(`excluded slices: cannot read ${JSON.stringify(part.trim())}`);
          return;
        }
        slices.push([a, b]);
      }
    }
    onEdit('excludedSlices', slices);
  });
  $('theme').addEventListener('change', (e) => {
    state = {
      ...state,
      theme: (e.target as HTMLSelectElement).value === 'dark' ? 'dark' : 'light',
    };
    refreshSoon();
  });
  $('tree-input').addEventListener('input', (e) => {
    treeText = (e.target as HTMLTextAreaElement).value;
    refreshSoon();
  });
  $('tree-file').addEventListener('change', async (e) => {
    const file = (e.target as HTMLInputElement).files?.[0];
    if (!file) return;
    treeText = await file.text();
    ($('tree-input') as HTMLTextAreaElement).value = treeText;
    try {
      $('tree-stats').textContent = `${countNodes(parseTreeText(treeText))} nodes`;
    } catch {
      $('tree-stats').textContent = '';
    }
    refreshSoon();
  });
  $('export').addEventListener('click', () => {
    const blob = new Blob([exportConfigJson(state.config)], {
      type: 'application/json',
    });
    const link = document.createElement('a');
    link.href = URL.createObjectURL(blob);
    link.download = 'palette-config.json';
    link.click();
    URL.revokeObjectURL(link.href);
  });
  window.addEventListener('hashchange', () => {
    const decoded = decodeHash(location.hash);
    if (decoded) {
      state = decoded;
      syncWidgets();
      refreshSoon();
    }
  });
}

async function loadPresets(): Promise<void> {
  const picker = $('preset') as HTMLSelectElement;
  try {
    const presets = await api.presets();
    for (const entry of presets) {
      const option = document.createElement('option');
      option.value = entry.label;
      option.textContent = entry.label;
      picker.appendChild(option);
    }
    picker.addEventListener('change', () => {
      const entry = presets.find((p) => p.label === picker.value);
      if (!entry) return;
      state = { ...state, config: fromServerConfig(entry.config) };
      syncWidgets();
      refreshSoon();
    });
  } catch {
    showError('service unreachable: is "treehue serve" running?');
  }
}

async function start(): Promise<void> {
  ($('tree-input') as HTMLTextAreaElement).value = treeText;
  syncWidgets();
  bind();
  if (!(await api.health())) {
    showError('service unreachable: is "treehue serve" running?');
    return;
  }
  await loadPresets();
  await refresh();
}

start();

export { lastResponse }; // handy for console poking
