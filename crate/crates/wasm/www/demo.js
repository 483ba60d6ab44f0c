// Demo page wiring. Build the wasm package first:
//   wasm-pack build crates/wasm --target web --out-dir www/pkg
// then serve crates/wasm/www with any static file server.

import init, { reduce_point, domain_slices, analyze_matrix } from "./pkg/ford_wasm.js";

const canvas = document.getElementById("view");
const ctx = canvas.getContext("2d");
const groupSel = document.getElementById("group");
const heightInput = document.getElementById("height");
const heightValue = document.getElementById("height-value");
const resultPre = document.getElementById("result");
const clickHint = document.getElementById("click-hint");

// World windows per view; 3-d domains are sliced in the boundary plane,
// the 2-d domain is drawn in the half-plane itself.
const windows = {
  gamma: { x: [-1.0, 3.0], y: [-2.0, 2.0] },
  picard: { x: [-1.5, 1.5], y: [-1.5, 1.5] },
  "gamma-int": { x: [-1.0, 3.0], y: [0.0, 4.0] },
};

let lastPoint = null; // world coords of the last click

function world() {
  return windows[groupSel.value];
}

function toPixel(p) {
  const w = world();
  const sx = canvas.width / (w.x[1] - w.x[0]);
  const sy = canvas.height / (w.y[1] - w.y[0]);
  return [(p[0] - w.x[0]) * sx, canvas.height - (p[1] - w.y[0]) * sy];
}

function fromPixel(px, py) {
  const w = world();
  const sx = (w.x[1] - w.x[0]) / canvas.width;
  const sy = (w.y[1] - w.y[0]) / canvas.height;
  return [w.x[0] + px * sx, w.y[0] + (canvas.height - py) * sy];
}

function drawAxes() {
  ctx.strokeStyle = "#ddd";
  ctx.lineWidth = 1;
  const w = world();
  ctx.beginPath();
  let p = toPixel([w.x[0], 0]);
  ctx.moveTo(p[0], p[1]);
  p = toPixel([w.x[1], 0]);
  ctx.lineTo(p[0], p[1]);
  p = toPixel([0, w.y[0]]);
  ctx.moveTo(p[0], p[1]);
  p = toPixel([0, w.y[1]]);
  ctx.lineTo(p[0], p[1]);
  ctx.stroke();
}

function drawLoops(loops, stroke, fill) {
  for (const loop of loops) {
    ctx.beginPath();
    loop.forEach((pt, i) => {
      const p = toPixel(pt);
      if (i === 0) ctx.moveTo(p[0], p[1]);
      else ctx.lineTo(p[0], p[1]);
    });
    if (fill) {
      ctx.fillStyle = fill;
      ctx.fill();
    }
    ctx.strokeStyle = stroke;
    ctx.lineWidth = 1.5;
    ctx.stroke();
  }
}

function drawDot(pt, color, label) {
  const p = toPixel(pt);
  ctx.beginPath();
  ctx.arc(p[0], p[1], 5, 0, 2 * Math.PI);
  ctx.fillStyle = color;
  ctx.fill();
  if (label) {
    ctx.fillStyle = color;
    ctx.font = "12px sans-serif";
    ctx.fillText(label, p[0] + 8, p[1] - 8);
  }
}

function drawGammaIntDomain() {
  // Walls x = 0 and x = 2, circle (x-1)^2 + y^2 = 2.
  const loops = [];
  const w = world();
  loops.push([[0, 0], [0, w.y[1]]]);
  loops.push([[2, 0], [2, w.y[1]]]);
  const arc = [];
  for (let k = 0; k <= 96; k++) {
    const t = Math.PI * k / 96;
    arc.push([1 + Math.SQRT2 * Math.cos(t), Math.SQRT2 * Math.sin(t)]);
  }
  loops.push(arc);
  drawLoops(loops, "#1f77b4", null);
}

function redraw() {
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  drawAxes();
  const group = groupSel.value;
  if (group === "gamma-int") {
    heightInput.parentElement.style.visibility = "hidden";
    clickHint.textContent = "click sets (x, y) in the half-plane";
    drawGammaIntDomain();
  } else {
    heightInput.parentElement.style.visibility = "visible";
    clickHint.textContent = "click sets (x1, x2) at the chosen height";
    const y = parseFloat(heightInput.value);
    heightValue.textContent = y.toFixed(2);
    const geo = JSON.parse(domain_slices(group, String(y)));
    const slice = geo.slices[0];
    if (slice.loops.length === 0) {
      ctx.fillStyle = "#777";
      ctx.font = "13px sans-serif";
      ctx.fillText("empty cross-section at this height", 16, 24);
    } else {
      drawLoops(slice.loops, "#1f77b4", "rgba(31,119,180,0.08)");
    }
  }
  if (lastPoint) {
    drawDot(lastPoint.input, "#d62728", "input");
    if (lastPoint.reduced) drawDot(lastPoint.reduced, "#2ca02c", "reduced");
  }
}

function reduceAt(worldPt) {
  const group = groupSel.value;
  let out;
  if (group === "gamma-int") {
    out = JSON.parse(reduce_point(group, worldPt[0], 0, worldPt[1], 0));
  } else {
    const y = parseFloat(heightInput.value);
    out = JSON.parse(reduce_point(group, worldPt[0], worldPt[1], y, 0));
  }
  if (out.error) {
    resultPre.textContent = "error: " + out.error;
    lastPoint = { input: worldPt, reduced: null };
  } else {
    resultPre.textContent = JSON.stringify(out, null, 2);
    const reduced = group === "gamma-int"
      ? [out.point.x, out.point.y]
      : [out.point.x1, out.point.x2];
    lastPoint = { input: worldPt, reduced };
  }
  redraw();
}

canvas.addEventListener("click", (ev) => {
  const rect = canvas.getBoundingClientRect();
  reduceAt(fromPixel(ev.clientX - rect.left, ev.clientY - rect.top));
});

groupSel.addEventListener("change", () => {
  lastPoint = null;
  resultPre.textContent = "click the canvas";
  redraw();
});

heightInput.addEventListener("input", redraw);

document.getElementById("analyze").addEventListener("click", () => {
  const text = document.getElementById("matrix").value;
  const out = analyze_matrix(text);
  try {
    document.getElementById("matrix-result").textContent =
      JSON.stringify(JSON.parse(out), null, 2);
  } catch {
    document.getElementById("matrix-result").textContent = out;
  }
});

init().then(redraw);
