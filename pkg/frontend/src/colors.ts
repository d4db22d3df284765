/** Method palette: social methods on a blue scale (darker with depth),
 * benchmark seeders in yellows and greens. */

const METHOD_COLORS: Record<string, string> = {
  random: "#d4a017",
  picky_random: "#e8c547",
  gec: "#2a9d4e",
  picky_gec: "#7fc97f",
  social_0: "#9ecae1",
  social_1: "#3182bd",
  social_2: "#08519c",
};

const METHOD_ORDER = Object.keys(METHOD_COLORS);

export function methodColor(method: string): string {
  return METHOD_COLORS[method] ?? "#777777";
}

/** Canonical method order for legends; unknown labels sort last, A-Z. */
export function sortMethods(labels: string[]): string[] {
  return [...labels].sort((a, b) => {
    const ia = METHOD_ORDER.indexOf(a);
    const ib = METHOD_ORDER.indexOf(b);
    if (ia >= 0 && ib >= 0) return ia - ib;
    if (ia >= 0) return -1;
    if (ib >= 0) return 1;
    return a < b ? -1 : a > b ? 1 : 0;
  });
}
