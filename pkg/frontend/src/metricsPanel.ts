/** Presentation model for the six design-rule scores.
 *
 * Directional hints only — no composite score is invented; the numbers come
 * from the service untouched.
 */

export interface MetricRow {
  key: string;
  label: string;
  hint: string;
  value: string;
}

interface MetricsDoc {
  discriminative_power?: Record<string, number | null>;
  uniformity?: number | null;
  order_violations?: number;
  parent_child_gap?: {
    mean_parent_child: number;
    mean_non_adjacent: number;
  } | null;
  importance_spread?: Record<
    string,
    { std_luminance: number; std_chroma: number } | null
  >;
  background_contrast?: number;
  gamut_coverage?: { fraction: number; max_clamp: number };
}

const num = (v: number | null | undefined, digits = 2): string =>
  v === null || v === undefined ? 'n/a' : v.toFixed(digits);

export function metricRows(doc: Record<string, unknown>): MetricRow[] {
  const m = doc as MetricsDoc;
  const rows: MetricRow[] = [];
  const dp = m.discriminative_power ?? {};
  rows.push({
    key: 'discriminative_power',
    label: 'Discriminative power (min ΔE, all)',
    hint: 'higher is better',
    value: num(dp['all']),
  });
  rows.push({
    key: 'uniformity',
    label: 'Uniformity (rank agreement ρ)',
    hint: 'higher is better',
    value: num(m.uniformity, 3),
  });
  rows.push({
    key: 'order_violations',
    label: 'Order violations',
    hint: 'lower is better (0 expected)',
    value: m.order_violations === undefined ? 'n/a' : String(m.order_violations),
  });
  const gap = m.parent_child_gap;
  rows.push({
    key: 'parent_child_gap',
    label: 'Parent–child vs stranger ΔE',
    hint: 'edges should be smaller',
    value: gap
      ? `${num(gap.mean_parent_child)} vs ${num(gap.mean_non_adjacent)}`
      : 'n/a',
  });
  const spread = m.importance_spread?.['leaves'];
  rows.push({
    key: 'importance_spread',
    label: 'Leaf chroma/luminance spread',
    hint: 'lower is better',
    value: spread ? `${num(spread.std_chroma)} / ${num(spread.std_luminance)}` : 'n/a',
  });
  rows.push({
    key: 'background_contrast',
    label: 'Background contrast (min |ΔL*|)',
    hint: 'higher is better',
    value: num(m.background_contrast),
  });
  const gamut = m.gamut_coverage;
  rows.push({
    key: 'gamut_coverage',
    label: 'In-gamut fraction',
    hint: 'higher is better',
    value: gamut ? `${(gamut.fraction * 100).toFixed(0)}%` : 'n/a',
  });
  return rows;
}
