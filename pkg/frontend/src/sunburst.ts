/** Sunburst geometry from server-provided hue ranges.
 *
 * No palette math here: each node's angular extent comes straight from its
 * range_start/range_width relative to the root range, the same mapping the
 * server-side SVG renderer uses. Fills are the gamut-safe hex codes.
 */

import type { PaletteNode } from './api.js';

export const WARNING_STROKE = '#ff2a2a';

export interface Arc {
  path: string;
  depth: number;
  /** SVG path "d", or null for the root disc */
  d: string | null;
  fill: string;
  warning: boolean;
  startDeg: number;
  extentDeg: number;
  title: string;
}

export interface SunburstLayout {
  size: number;
  center: number;
  ringWidth: number;
  arcs: Arc[];
}

/** Angular extent of one node in degrees of the full circle. */
export function arcExtentDeg(node: PaletteNode, root: PaletteNode): number {
  return (node.range_width / root.range_width) * 360;
}

export function arcStartDeg(node: PaletteNode, root: PaletteNode): number {
  return ((node.range_start - root.range_start) / root.range_width) * 360;
}

const fmt = (v: number) => {
  const s = v.toFixed(3);
  return s === '-0.000' ? '0.000' : s;
};

function annularSector(
  cx: number,
  cy: number,
  r0: number,
  r1: number,
  startDeg: number,
  extentDeg: number,
): string {
  const a0 = (startDeg * Math.PI) / 180;
  const a1 = ((startDeg + Math.min(extentDeg, 359.999)) * Math.PI) / 180;
  const large = extentDeg > 180 ? 1 : 0;
  const p = (r: number, a: number) =>
    `${fmt(cx + r * Math.cos(a))} ${fmt(cy + r * Math.sin(a))}`;
  return [
    `M ${p(r0, a0)}`,
    `L ${p(r1, a0)}`,
    `A ${fmt(r1)} ${fmt(r1)} 0 ${large} 1 ${p(r1, a1)}`,
    `L ${p(r0, a1)}`,
    `A ${fmt(r0)} ${fmt(r0)} 0 ${large} 0 ${p(r0, a0)}`,
    'Z',
  ].join(' ');
}

export function layoutSunburst(nodes: PaletteNode[], size: number): SunburstLayout {
  const root = nodes.find((n) => n.depth === 0);
  if (!root) throw new Error('palette has no root node');
  const maxDepth = nodes.reduce((m, n) => Math.max(m, n.depth), 0);
  const center = size / 2;
  const ringWidth = center / (maxDepth + 1);
  const arcs: Arc[] = nodes.map((node) => {
    const startDeg = arcStartDeg(node, root);
    const extentDeg = arcExtentDeg(node, root);
    const r0 = node.depth * ringWidth;
    const r1 = (node.depth + 1) * ringWidth;
    return {
      path: node.path,
      depth: node.depth,
      d:
        node.depth === 0
          ? null
          : annularSector(center, center, r0, r1, startDeg - 90, extentDeg),
      fill: node.clamped_hex,
      warning: !node.in_gamut,
      startDeg,
      extentDeg,
      title: `${node.path} — ${node.clamped_hex}`,
    };
  });
  return { size, center, ringWidth, arcs };
}

export function sunburstSvg(nodes: PaletteNode[], size: number): string {
  const layout = layoutSunburst(nodes, size);
  const parts = [
    `<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 ${size} ${size}">`,
  ];
  for (const arc of layout.arcs) {
    const stroke = arc.warning
      ? ` stroke="${WARNING_STROKE}" stroke-width="2"`
      : ' stroke="none"';
    if (arc.d === null) {
      parts.push(
        `<circle cx="${layout.center}" cy="${layout.center}"` +
          ` r="${fmt(layout.ringWidth)}" fill="${arc.fill}"${stroke}>` +
          `<title>${arc.title}</title></circle>`,
      );
    } else {
      parts.push(
        `<path d="${arc.d}" fill="${arc.fill}"${stroke}>` +
          `<title>${arc.title}</title></path>`,
      );
    }
  }
  parts.push('</svg>');
  return parts.join('\n');
}
