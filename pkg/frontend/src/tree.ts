/** Client-side hierarchy input parsing: nested JSON or one path per line.
 *
 * Only shape validation happens here — the server remains the single source
 * of truth for everything color-related.
 */

export interface TreeInput {
  name: string;
  children?: TreeInput[];
}

export class TreeParseError extends Error {}

function checkNode(node: unknown, where: string): TreeInput {
  if (typeof node !== 'object' || node === null || Array.isArray(node)) {
    throw new TreeParseError(`${where}: node must be an object`);
  }
  const doc = node as Record<string, unknown>;
  if (typeof doc.name !== 'string' || doc.name.length === 0) {
    throw new TreeParseError(`${where}: missing non-empty "name"`);
  }
  if (doc.name.includes('/')) {
    throw new TreeParseError(`${where}: name ${JSON.stringify(doc.name)} contains "/"`);
  }
  const out: TreeInput = { name: doc.name };
  if (doc.children !== undefined) {
    if (!Array.isArray(doc.children)) {
      throw new TreeParseError(`${where}: "children" must be an array`);
    }
    out.children = doc.children.map((c, i) =>
      checkNode(c, `${where}/${doc.name}[${i}]`),
    );
  }
  return out;
}

export function parseNestedJson(text: string): TreeInput {
  let doc: unknown;
  try {
    doc = JSON.parse(text);
  } catch (err) {
    throw new TreeParseError(`invalid JSON: ${(err as Error).message}`);
  }
  return checkNode(doc, 'root');
}

/** Slash-separated paths, one per line; nodes created on first mention. */
export function parsePathCsv(text: string): TreeInput {
  let root: TreeInput | null = null;
  const index = new Map<string, TreeInput>();
  const lines = text.split('\n');
  for (let lineno = 1; lineno <= lines.length; lineno++) {
    const line = (lines[lineno - 1] ?? '').trim();
    if (line === '') continue;
    const parts = line.split('/');
    if (parts.some((p) => p === '')) {
      throw new TreeParseError(`line ${lineno}: empty path segment in ${JSON.stringify(line)}`);
    }
    let path = '';
    let parent: TreeInput | null = null;
    for (const part of parts) {
      path = path === '' ? part : `${path}/${part}`;
      let node = index.get(path);
      if (!node) {
        node = { name: part };
        index.set(path, node);
        if (parent === null) {
          if (root !== null && root !== node) {
            throw new TreeParseError(`line ${lineno}: second root ${JSON.stringify(part)}`);
          }
          root = node;
        } else {
          (parent.children ??= []).push(node);
        }
      } else if (parent === null && root !== node) {
        throw new TreeParseError(`line ${lineno}: second root ${JSON.stringify(part)}`);
      }
      parent = node;
    }
  }
  if (root === null) throw new TreeParseError('no paths found');
  return root;
}

export function countNodes(tree: TreeInput): number {
  return 1 + (tree.children ?? []).reduce((n, c) => n + countNodes(c), 0);
}

/** Auto-detect the format: JSON object text vs path lines. */
export function parseTreeText(text: string): TreeInput {
  const trimmed = text.trim();
  if (trimmed.startsWith('{')) return parseNestedJson(trimmed);
  return parsePathCsv(text);
}
