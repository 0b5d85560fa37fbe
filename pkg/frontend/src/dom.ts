// Tiny DOM helpers; no framework, no templates.

export function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  attrs: Record<string, string> = {},
  children: (Node | string)[] = [],
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  for (const [key, value] of Object.entries(attrs)) {
    if (key === "class") node.className = value;
    else node.setAttribute(key, value);
  }
  for (const child of children) {
    node.append(child);
  }
  return node;
}

export function clear(node: HTMLElement): void {
  while (node.firstChild) node.removeChild(node.firstChild);
}

// Numbers are displayed exactly as they arrived in the API payload:
// String() of a JSON-parsed double reproduces the shortest round-trip
// literal, so the UI never invents digits of its own.
export function show(value: number | string | null | undefined): string {
  if (value === null || value === undefined) return "-";
  return String(value);
}
