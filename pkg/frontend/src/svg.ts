/** Deterministic SVG string building: fixed number formatting, fixed fonts,
 * no timestamps or generated ids, so identical inputs yield identical bytes. */

export const FONT = "Helvetica, Arial, sans-serif";

/** Fixed two-decimal coordinate formatting; normalizes negative zero. */
export function fmt(v: number): string {
  const s = v.toFixed(2);
  return s === "-0.00" ? "0.00" : s;
}

export function escapeXml(s: string): string {
  return s
    .replaceAll("&", "&amp;")
    .replaceAll("<", "&lt;")
    .replaceAll(">", "&gt;")
    .replaceAll('"', "&quot;");
}

export type Attrs = Record<string, string | number>;

function attrText(attrs: Attrs): string {
  return Object.entries(attrs)
    .map(([k, v]) => ` ${k}="${typeof v === "number" ? fmt(v) : escapeXml(v)}"`)
    .join("");
}

export function el(tag: string, attrs: Attrs, children = ""): string {
  return children === ""
    ? `<${tag}${attrText(attrs)}/>`
    : `<${tag}${attrText(attrs)}>${children}</${tag}>`;
}

export function textEl(
  x: number,
  y: number,
  content: string,
  attrs: Attrs = {},
): string {
  return el(
    "text",
    { x, y, "font-family": FONT, "font-size": 11, fill: "#222222", ...attrs },
    escapeXml(content),
  );
}

export function svgDocument(width: number, height: number, body: string): string {
  return (
    `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}" ` +
    `viewBox="0 0 ${width} ${height}">\n` +
    el("rect", { x: 0, y: 0, width, height, fill: "#ffffff" }) +
    "\n" +
    body +
    "\n</svg>\n"
  );
}
