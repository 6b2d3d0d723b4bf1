// Build the bindings first:
//   cargo build -p lpcert-web --target wasm32-unknown-unknown --release
//   wasm-bindgen --target web --out-dir crates/web/www/pkg \
//     target/wasm32-unknown-unknown/release/lpcert_web.wasm
import init, { expand, verify_certificate, distance_distribution } from "./pkg/lpcert_web.js";

const $ = (id) => document.getElementById(id);

function show(el, result, format) {
  if (result.error) {
    el.className = "bad";
    el.textContent = result.error;
  } else {
    el.className = "";
    el.textContent = format(result);
  }
}

function plot(canvas, r) {
  const g = canvas.getContext("2d");
  const w = canvas.width, h = canvas.height, pad = 20;
  const x = (t) => pad + (t + 1) / 2 * (w - 2 * pad);
  const y = (v) => h / 2 - v * (h / 2 - pad);
  g.clearRect(0, 0, w, h);
  g.fillStyle = "#e6f2e6";
  for (const [a, b] of r.intervals) g.fillRect(x(a) - 1, 0, Math.max(2, x(b) - x(a) + 2), h);
  g.strokeStyle = "#999";
  g.beginPath(); g.moveTo(pad, y(0)); g.lineTo(w - pad, y(0)); g.stroke();
  g.strokeStyle = r.valid ? "#1a5" : "#c22";
  g.lineWidth = 2;
  g.beginPath();
  r.curve.forEach(([t, v], i) => (i ? g.lineTo(x(t), y(v)) : g.moveTo(x(t), y(v))));
  g.stroke();
  g.fillStyle = "#000";
  for (const z of r.zeros) {
    g.beginPath(); g.arc(x(z.at), y(0), z.multiplicity > 1 ? 5 : 3, 0, 2 * Math.PI); g.fill();
  }
}

await init();

$("verify").onclick = () => {
  const r = JSON.parse(verify_certificate($("cert").value, 800));
  show($("verify-out"), r, (r) => [
    `mode: ${r.mode}`,
    `valid: ${r.valid}`,
    `bound: ${r.bound ?? "none"}`,
    `sign on allowed set: ${r.sign}`,
    ...r.coefficients.map((c, i) => `f_${i}: ${c}`),
    ...r.failures.map((f) => `failure: ${f}`),
  ].join("\n"));
  if (!r.error) plot($("plot"), r);
};

$("expand").onclick = () => {
  const r = JSON.parse(expand(Number($("exp-dim").value), $("exp-poly").value));
  show($("expand-out"), r, (r) => [
    `p(t) = ${r.polynomial}`,
    ...r.coefficients.map((c, i) => `f_${i}: ${c}`),
    `p(1): ${r.value_at_one}`,
    `p(1)/f_0: ${r.ratio ?? "undefined"}`,
  ].join("\n"));
};

$("solve").onclick = () => {
  const r = JSON.parse(distance_distribution(
    Number($("dd-dim").value), Number($("dd-tau").value),
    $("dd-values").value, $("dd-size").value, $("dd-anti").checked));
  show($("dd-out"), r, (r) => [
    ...r.entries.map((e) => `A(${e.t}) = ${e.count}`),
    `integral: ${r.integral}`,
    `nonnegative: ${r.nonnegative}`,
    `consistent: ${r.consistent}`,
    ...r.residuals.filter((x) => x.residual !== "0/1").map((x) => `residual k=${x.k}: ${x.residual}`),
  ].join("\n"));
};

$("verify").click();
