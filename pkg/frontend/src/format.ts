// Display formatting only: these never change a value, they print it.

export function money(value: number): string {
  const fixed = Math.abs(value).toFixed(2);
  const [whole, cents] = fixed.split(".");
  const grouped = whole.replace(/\B(?=(\d{3})+(?!\d))/g, ",");
  return `${value < 0 ? "-" : ""}${grouped}.${cents}`;
}

export function score(value: number): string {
  return value.toFixed(4);
}

export function ratio(value: number): string {
  return value.toFixed(6);
}

export function fraction(value: number): string {
  return value.toFixed(4);
}

export function signedFraction(value: number): string {
  return `${value < 0 ? "" : "+"}${value.toFixed(4)}`;
}

/** A span that shows a formatted number while carrying the raw API value. */
export function valueSpan(raw: number, text: string, cssClass = ""): string {
  const classAttr = cssClass ? ` class="${cssClass}"` : "";
  return `<span${classAttr} data-value="${raw}">${text}</span>`;
}
