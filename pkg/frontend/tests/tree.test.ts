import { describe, expect, it } from 'vitest';

import {
  countNodes,
  parseNestedJson,
  parsePathCsv,
  parseTreeText,
  TreeParseError,
} from '../src/tree.js';

describe('parseNestedJson', () => {
  it('accepts a minimal tree', () => {
    expect(parseNestedJson('{"name": "r"}')).toEqual({ name: 'r' });
  });

  it('keeps child order', () => {
    const tree = parseNestedJson(
      '{"name": "r", "children": [{"name": "a"}, {"name": "b"}]}',
    );
    expect(tree.children?.map((c) => c.name)).toEqual(['a', 'b']);
  });

  it('rejects invalid JSON with a message', () => {
    expect(() => parseNestedJson('{oops')).toThrow(TreeParseError);
  });

  it('rejects slashes in names, pointing at the node', () => {
    expect(() =>
      parseNestedJson('{"name": "r", "children": [{"name": "a/b"}]}'),
    ).toThrow(/a\/b/);
  });

  it('rejects missing names with location context', () => {
    expect(() =>
      parseNestedJson('{"name": "r", "children": [{"children": []}]}'),
    ).toThrow(/root\/r\[0\]/);
  });
});

describe('parsePathCsv', () => {
  it('builds three nodes from two leaf paths', () => {
    const tree = parsePathCsv('r/a\nr/b');
    expect(countNodes(tree)).toBe(3);
    expect(tree.name).toBe('r');
    expect(tree.children?.map((c) => c.name)).toEqual(['a', 'b']);
  });

  it('creates nodes on first mention, deeper paths later', () => {
    const tree = parsePathCsv('r/a\nr/b/c\nr/a/d');
    expect(countNodes(tree)).toBe(5);
    expect(tree.children?.[0]?.children?.[0]?.name).toBe('d');
  });

  it('ignores blank lines', () => {
    expect(countNodes(parsePathCsv('r/a\n\nr/b\n'))).toBe(3);
  });

  it('reports the offending line number', () => {
    expect(() => parsePathCsv('r/a\nx/b')).toThrow(/line 2/);
    expect(() => parsePathCsv('r/a\nr//b')).toThrow(/line 2/);
  });

  it('rejects empty input', () => {
    expect(() => parsePathCsv('\n\n')).toThrow(TreeParseError);
  });
});

describe('parseTreeText', () => {
  it('auto-detects both formats', () => {
    expect(countNodes(parseTreeText('  {"name": "r"}'))).toBe(1);
    expect(countNodes(parseTreeText('r/a\nr/b'))).toBe(3);
  });
});
