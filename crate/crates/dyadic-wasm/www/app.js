import init, { sample_json, tree_json, growth_json } from "../pkg/dyadic_wasm.js";

const HOOK = "#c03a2b";
const LEAF = "#e0b030";
const INK = "#222";
const ACCENT = "#2456a4";

function el(id) {
  return document.getElementById(id);
}

// ---- sampler ----------------------------------------------------------

function drawYoungDiagram(ctx, parts, x0, y0, cell, fill) {
  ctx.strokeStyle = "#666";
  ctx.fillStyle = fill;
  ctx.lineWidth = 1;
  parts.forEach((row, i) => {
    for (let j = 0; j < row; j++) {
      ctx.fillRect(x0 + j * cell, y0 + i * cell, cell, cell);
      ctx.strokeRect(x0 + j * cell + 0.5, y0 + i * cell + 0.5, cell, cell);
    }
  });
}

function renderSample() {
  const canvas = el("sample-canvas");
  const ctx = canvas.getContext("2d");
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  const meta = el("sample-meta");
  const kind = el("sample-kind").value;
  const n = Number(el("sample-n").value);
  const seed = BigInt(el("sample-seed").value || 0);
  let data;
  try {
    data = JSON.parse(sample_json(kind, n, seed));
  } catch (err) {
    meta.innerHTML = `<span class="error">${err}</span>`;
    return;
  }
  // Cell size adapts so the widest component fits.
  const widths = data.components.map((c) => (c.parts[0] || 1));
  const heights = data.components.map((c) => Math.max(c.parts.length, 1));
  const slot = canvas.width / data.components.length;
  const cell = Math.max(
    2,
    Math.min(
      18,
      Math.floor(Math.min(slot - 30, canvas.width / 2) / Math.max(...widths, 1)),
      Math.floor((canvas.height - 20) / Math.max(...heights, 1)),
    ),
  );
  data.components.forEach((c, i) => {
    const fill = c.chiral ? "#e9c8c2" : "#c8d4e9";
    drawYoungDiagram(ctx, c.parts, 10 + i * slot, 10, cell, fill);
  });
  const lines = data.components.map((c, i) => {
    const name = data.components.length > 1 ? (i === 0 ? "α = " : "β = ") : "λ = ";
    const props = `odd: ${c.odd}, chiral: ${c.chiral}`;
    const frob = `frobenius (${JSON.stringify(c.frobenius[0])}, ${JSON.stringify(c.frobenius[1])})`;
    return `${name}${c.text}\n    ${props}; ${frob}`;
  });
  meta.textContent = lines.join("\n");
}

// ---- tree explorer ----------------------------------------------------

function renderTree() {
  const svg = el("tree-svg");
  const kind = el("tree-kind").value;
  const ranks = Number(el("tree-n").value);
  el("tree-n-label").textContent = ranks;
  let graph;
  try {
    graph = JSON.parse(tree_json(kind, ranks));
  } catch (err) {
    svg.innerHTML = `<text x="10" y="24" fill="#b00">${err}</text>`;
    return;
  }
  const W = svg.width.baseVal.value;
  const H = svg.height.baseVal.value;
  const levels = graph.levels;
  const pos = new Map();
  let body = "";
  const levelY = (lvl) => H - 18 - (lvl * (H - 36)) / Math.max(levels.length - 1, 1);
  levels.forEach((ids, lvl) => {
    ids.forEach((id, i) => {
      const x = ((i + 1) * W) / (ids.length + 1);
      pos.set(id, [x, levelY(lvl)]);
    });
  });
  for (const [lo, hi] of graph.edges) {
    const [x1, y1] = pos.get(lo);
    const [x2, y2] = pos.get(hi);
    body += `<line x1="${x1}" y1="${y1}" x2="${x2}" y2="${y2}" stroke="#bbb" stroke-width="1"/>`;
  }
  const radius = levels.length > 12 ? 2.5 : 4;
  for (const node of graph.nodes) {
    const [x, y] = pos.get(node.id);
    const color = node.one_dim ? INK : node.hook ? HOOK : LEAF;
    body += `<circle cx="${x}" cy="${y}" r="${radius}" fill="${color}">` +
      `<title>${node.label}  (dim ${node.dim})</title></circle>`;
  }
  svg.innerHTML = body;
}

// ---- growth plot ------------------------------------------------------

function renderGrowth() {
  const canvas = el("growth-canvas");
  const ctx = canvas.getContext("2d");
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  const maxN = Number(el("growth-n").value);
  el("growth-n-label").textContent = maxN;
  const rows = JSON.parse(growth_json(BigInt(maxN)));
  const top = Math.max(...rows.map((r) => r.log10_chiral_shifted)) + 0.5;
  const X = (n) => 40 + ((n - 1) * (canvas.width - 60)) / Math.max(maxN - 1, 1);
  const Y = (v) => canvas.height - 24 - (v / top) * (canvas.height - 40);
  ctx.strokeStyle = "#ddd";
  ctx.fillStyle = "#777";
  ctx.font = "11px sans-serif";
  for (let tick = 0; tick <= top; tick += Math.ceil(top / 6)) {
    ctx.beginPath();
    ctx.moveTo(40, Y(tick));
    ctx.lineTo(canvas.width - 16, Y(tick));
    ctx.stroke();
    ctx.fillText(`1e${tick}`, 6, Y(tick) + 4);
  }
  const polyline = (key, color) => {
    ctx.strokeStyle = color;
    ctx.lineWidth = 1.4;
    ctx.beginPath();
    rows.forEach((r, i) => {
      const [x, y] = [X(r.n), Y(r[key])];
      if (i === 0) ctx.moveTo(x, y);
      else ctx.lineTo(x, y);
    });
    ctx.stroke();
  };
  polyline("log10_odd", ACCENT);
  polyline("log10_chiral_shifted", HOOK);
  ctx.fillStyle = "#777";
  ctx.fillText("n", canvas.width - 12, canvas.height - 8);
  ctx.fillText(`a(${maxN}) = ${rows[maxN - 1].odd}`, 46, 16);
}

// ---- wiring -----------------------------------------------------------

await init();

el("sample-go").addEventListener("click", () => {
  el("sample-seed").value = Number(el("sample-seed").value || 0) + 1;
  renderSample();
});
for (const id of ["sample-kind", "sample-n", "sample-seed"]) {
  el(id).addEventListener("change", renderSample);
}
const TREE_CAPS = { macdonald: 24, "hyper-macdonald": 12, pascal: 64 };
el("tree-kind").addEventListener("change", () => {
  const cap = TREE_CAPS[el("tree-kind").value];
  const slider = el("tree-n");
  slider.max = cap;
  if (Number(slider.value) > cap) slider.value = cap;
  renderTree();
});
el("tree-n").addEventListener("input", renderTree);
el("growth-n").addEventListener("input", renderGrowth);

renderSample();
renderTree();
renderGrowth();
