import init, { revivalCurves, wignerImage, photonDistribution } from "./pkg/rabi_dsc_web.js";

const $ = (id) => document.getElementById(id);
const PHOTON_ROWS = 64;
const GRID_MIN = -9;
const GRID_MAX = 6;

function model() {
  return {
    g: Number($("g").value),
    omega0: Number($("omega0").value),
    level: Number($("level").value),
    nmax: Number($("nmax").value),
  };
}

function status(msg, isError = false) {
  $("status").textContent = msg;
  $("status").className = isError ? "err" : "note";
}

function guarded(fn) {
  return () => {
    try {
      fn();
    } catch (e) {
      status(String(e.message ?? e), true);
    }
  };
}

function axes(ctx, w, h, pad, xmax, ymax, xlabel) {
  ctx.clearRect(0, 0, w, h);
  ctx.strokeStyle = "#888";
  ctx.fillStyle = "#444";
  ctx.font = "11px sans-serif";
  ctx.beginPath();
  ctx.moveTo(pad, pad / 2);
  ctx.lineTo(pad, h - pad);
  ctx.lineTo(w - pad / 2, h - pad);
  ctx.stroke();
  for (let k = 0; k <= xmax; k += Math.max(1, Math.round(xmax / 10))) {
    const x = pad + (k / xmax) * (w - 1.5 * pad);
    ctx.fillText(String(k), x - 3, h - pad + 14);
  }
  ctx.fillText(xlabel, w - pad * 1.5, h - 6);
  ctx.fillText(ymax.toFixed(2), 4, pad / 2 + 4);
  ctx.fillText("0", pad - 12, h - pad);
}

function drawCurves() {
  const m = model();
  const tmax = Number($("tmax").value);
  const steps = Math.min(4001, Math.max(200, Math.round(tmax * 400)));
  const t0 = performance.now();
  const c = revivalCurves(m.g, m.omega0, m.nmax, m.level, tmax, steps);
  const canvas = $("curves");
  const ctx = canvas.getContext("2d");
  const pad = 40;
  const w = canvas.width;
  const h = canvas.height;
  axes(ctx, w, h, pad, tmax, 1, "t");
  const periods = c.periods;
  const line = (ys, color, dash) => {
    if (ys.length === 0) return;
    ctx.strokeStyle = color;
    ctx.setLineDash(dash);
    ctx.beginPath();
    ys.forEach((y, i) => {
      const px = pad + (periods[i] / tmax) * (w - 1.5 * pad);
      const py = h - pad - y * (h - 1.5 * pad);
      i === 0 ? ctx.moveTo(px, py) : ctx.lineTo(px, py);
    });
    ctx.stroke();
  };
  line(c.noSplitting, "#999", [2, 3]);
  line(c.twoMode, "#2a9d3f", [6, 4]);
  line(c.firstOrder, "#d47500", [3, 2]);
  line(c.exact, "#1f5fbf", []);
  ctx.setLineDash([]);
  const tail = c.tailMassBound;
  status(`curves: ${steps} samples in ${(performance.now() - t0).toFixed(0)} ms` +
    (tail > 1e-8 ? `; truncation tail ${tail.toExponential(1)}, raise n_max` : ""), tail > 1e-8);
  c.free();
}

// diverging map: blue negative, white zero, red positive
function colour(v, scale) {
  const s = Math.max(-1, Math.min(1, v / scale));
  if (s >= 0) return [255, Math.round(255 * (1 - s)), Math.round(255 * (1 - s))];
  return [Math.round(255 * (1 + s)), Math.round(255 * (1 + s)), 255];
}

function drawWigner() {
  const m = model();
  const t = Number($("wtime").value);
  $("wtime-v").textContent = t.toFixed(2);
  const n = Number($("wpoints").value);
  const w = wignerImage(m.g, m.omega0, m.nmax, m.level, t, GRID_MIN, GRID_MAX, n);
  const values = w.values;
  let scale = 0;
  for (const v of values) scale = Math.max(scale, Math.abs(v));
  const canvas = $("wigner");
  const ctx = canvas.getContext("2d");
  const img = ctx.createImageData(n, n);
  for (let ix = 0; ix < n; ix++) {
    for (let ip = 0; ip < n; ip++) {
      const [r, g, b] = colour(values[ix * n + ip], scale);
      const o = 4 * ((n - 1 - ip) * n + ix);
      img.data[o] = r;
      img.data[o + 1] = g;
      img.data[o + 2] = b;
      img.data[o + 3] = 255;
    }
  }
  const off = new OffscreenCanvas(n, n);
  off.getContext("2d").putImageData(img, 0, 0);
  ctx.imageSmoothingEnabled = false;
  ctx.drawImage(off, 0, 0, canvas.width, canvas.height);
  const toPx = (v) => ((v - GRID_MIN) / (GRID_MAX - GRID_MIN)) * canvas.width;
  ctx.strokeStyle = "#333";
  ctx.beginPath();
  ctx.arc(toPx(w.meanX), canvas.height - toPx(w.meanP), 4, 0, 2 * Math.PI);
  ctx.stroke();
  $("wigner-info").textContent =
    `mean (x, p) = (${w.meanX.toFixed(3)}, ${w.meanP.toFixed(3)}); ` +
    `negativity ${w.negativity.toExponential(2)}; ` +
    `variance tangential ${w.tangential.toFixed(3)}, normal ${w.normal.toFixed(3)}; ` +
    `colour scale ±${scale.toFixed(3)}`;
  w.free();
}

function drawPhotons() {
  const m = model();
  const t = Number($("ptime").value);
  $("ptime-v").textContent = t.toFixed(2);
  const p = photonDistribution(m.g, m.omega0, m.nmax, m.level, t, PHOTON_ROWS);
  const canvas = $("photons");
  const ctx = canvas.getContext("2d");
  const pad = 40;
  const w = canvas.width;
  const h = canvas.height;
  const ymax = Math.max(...p, 1e-3);
  axes(ctx, w, h, pad, p.length, ymax, "n");
  const bw = (w - 1.5 * pad) / p.length;
  ctx.fillStyle = "#1f5fbf";
  p.forEach((v, n) => {
    const bh = (v / ymax) * (h - 1.5 * pad);
    ctx.fillRect(pad + n * bw + 1, h - pad - bh, bw - 2, bh);
  });
}

function redrawAll() {
  guarded(drawCurves)();
  guarded(drawWigner)();
  guarded(drawPhotons)();
}

await init();
$("run-curves").addEventListener("click", guarded(drawCurves));
$("wtime").addEventListener("input", guarded(drawWigner));
$("wpoints").addEventListener("change", guarded(drawWigner));
$("ptime").addEventListener("input", guarded(drawPhotons));
for (const id of ["g", "omega0", "level", "nmax"]) $(id).addEventListener("change", redrawAll);
redrawAll();
