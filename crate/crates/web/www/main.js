import init, { run_trace, cost_sweep, fuzzify_and_run } from "./pkg/fuzzy_pamu_web.js";

const REFERENCE = {
  alphabet: ["a", "b", "c", "d", "e"],
  word_width: 8,
  correction: true,
  classes: [{ name: "w1" }, { name: "w2" }, { name: "w3" }],
  etalons: [
    { name: "E1", class: "w1", symbols: ["a", "b", "c", "d", "e"] },
    { name: "E2", class: "w2", symbols: ["e", "a", "b"] },
    { name: "E3", class: "w3", symbols: ["b", "a", "d", "e"] },
  ],
  control_table: { w1: "10110011", w2: "01100101", w3: "11110000" },
};

const lowHigh = (name) => ({
  name,
  universe: [0, 100],
  clamp: true,
  terms: [
    { name: "low", points: [[0, 1], [100, 0]] },
    { name: "high", points: [[0, 0], [100, 1]] },
  ],
});

const PIPELINE = {
  alphabet: ["low", "high"],
  word_width: 8,
  correction: true,
  classes: [{ name: "w1" }, { name: "w2" }],
  etalons: [
    { name: "E1", class: "w1", symbols: ["low", "high", "low", "high", "high"] },
    { name: "E2", class: "w1", symbols: ["high", "low", "high"] },
    { name: "E3", class: "w2", symbols: ["high", "low", "high", "high"] },
  ],
  control_table: { w1: "10110011", w2: "01001100" },
  fuzzifier: { variables: ["temperature", "pressure", "flow", "level"].map(lowHigh) },
};

const $ = (id) => document.getElementById(id);

// Matrix table with the register state after `upto` steps.
function renderMatrix(view, upto, target) {
  let det = view.initial_detectors;
  let pos = 1;
  let fired = [];
  const done = new Set();
  for (let i = 0; i < upto; i++) {
    const s = view.steps[i];
    det = s.detectors;
    fired = s.fired;
    s.k2.forEach((l) => done.add(l));
    pos = s.position + (s.k1 ? 1 : 0);
  }
  const firedNow = upto > 0 ? view.steps[upto - 1] : null;
  let html = "<table class='matrix'><tr><th>lane</th><th>class</th>";
  for (let p = 1; p <= view.depth; p++) html += `<th>${p}</th>`;
  html += "<th>detector</th></tr>";
  view.lanes.forEach((lane, i) => {
    const l = i + 1;
    const alive = det[i] === "1";
    html += `<tr><td>${lane.name}</td><td>${lane.class}</td>`;
    for (let p = 1; p <= view.depth; p++) {
      const cell = lane.cells[p - 1] ?? "";
      let cls = "";
      if (firedNow && firedNow.k1 && fired.includes(l) && p === firedNow.position) cls = "fired";
      else if (p === pos && cell) cls = "cursor";
      if (!alive && !done.has(l)) cls += " dead";
      if (done.has(l) && p === lane.end) cls = "done";
      html += `<td class="${cls}">${cell}</td>`;
    }
    html += `<td>${det[i]}</td></tr>`;
  });
  html += "</table>";
  target.innerHTML = html;
}

let traceView = null;

function updateTrace() {
  try {
    traceView = JSON.parse(run_trace($("cfg").value, $("symbols").value));
  } catch (e) {
    $("matrix").innerHTML = `<p class="err">${e}</p>`;
    $("decision").textContent = "";
    return;
  }
  const slider = $("step");
  slider.max = traceView.steps.length;
  if (+slider.value > traceView.steps.length) slider.value = traceView.steps.length;
  showStep();
}

function showStep() {
  const k = +$("step").value;
  renderMatrix(traceView, k, $("matrix"));
  const s = k > 0 ? traceView.steps[k - 1] : null;
  $("stepinfo").textContent = s
    ? `step ${k}: '${s.symbol}' at position ${s.position}, K1=${s.k1 ? 1 : 0}, K2=[${s.k2}]`
    : "initial state";
  $("decision").textContent =
    `accepted lanes: [${traceView.accepted}]\n${traceView.decision}`;
}

function costParams() {
  const list = (id) => $(id).value.split(/[\s,]+/).filter(Boolean).map(Number);
  const I = list("I");
  return JSON.stringify({
    tau: +$("tau").value,
    gamma: +$("gamma").value,
    n_inputs: +$("n").value,
    N: I.length,
    I,
    J: list("J"),
    L: +$("L").value,
    K: +$("K").value,
    decision_field_global: $("global").checked,
  });
}

function updateCost() {
  $("Lval").textContent = $("L").value;
  let view;
  try {
    view = JSON.parse(cost_sweep(costParams(), +$("L").max));
  } catch (e) {
    $("costtable").textContent = String(e);
    $("costplot").innerHTML = "";
    return;
  }
  const r = view.report;
  $("costtable").textContent =
    `T_flexible   ${r.t_flexible}\nT_rigid      ${r.t_rigid}\n` +
    `V_flexible   ${r.v_flexible}\nV_rigid      ${r.v_rigid}\n` +
    `delta_time   ${r.delta_time}\ndelta_memory ${r.delta_memory}\nL*           ${r.crossover_rules}`;

  const svg = $("costplot");
  const W = +svg.getAttribute("width"), H = +svg.getAttribute("height"), pad = 40;
  const pts = view.sweep;
  const maxV = Math.max(...pts.map((p) => Math.max(p.v_flexible, p.v_rigid)));
  const x = (l) => pad + ((l - 1) / (pts.length - 1 || 1)) * (W - 2 * pad);
  const y = (v) => H - pad - (v / maxV) * (H - 2 * pad);
  const line = (key, color) =>
    `<polyline fill="none" stroke="${color}" stroke-width="2" points="${pts
      .map((p) => `${x(p.rules)},${y(p[key])}`)
      .join(" ")}"/>`;
  const L = +$("L").value;
  const star = r.crossover_rules;
  svg.innerHTML =
    `<line x1="${pad}" y1="${H - pad}" x2="${W - pad}" y2="${H - pad}" stroke="#888"/>` +
    `<line x1="${pad}" y1="${pad}" x2="${pad}" y2="${H - pad}" stroke="#888"/>` +
    line("v_flexible", "#d0452b") +
    line("v_rigid", "#2b6cd0") +
    (star <= pts.length
      ? `<line x1="${x(star)}" y1="${pad}" x2="${x(star)}" y2="${H - pad}" stroke="#999" stroke-dasharray="4"/>` +
        `<text x="${x(star) + 4}" y="${pad + 12}" font-size="11">L* = ${star}</text>`
      : "") +
    `<circle cx="${x(L)}" cy="${y(pts[L - 1].v_flexible)}" r="4" fill="#d0452b"/>` +
    `<text x="${W - pad - 120}" y="${pad}" font-size="11" fill="#d0452b">V flexible</text>` +
    `<text x="${W - pad - 120}" y="${pad + 14}" font-size="11" fill="#2b6cd0">V rigid</text>` +
    `<text x="${W / 2}" y="${H - 8}" font-size="11">rules L</text>` +
    `<text x="4" y="${pad - 8}" font-size="11">${maxV}</text>`;
}

function buildSliders() {
  const box = $("sliders");
  PIPELINE.fuzzifier.variables.forEach((v, i) => {
    const start = [90, 10, 80, 20][i];
    box.insertAdjacentHTML(
      "beforeend",
      `<div class="row"><label style="width:8rem">${v.name}</label>` +
        `<input id="var${i}" type="range" min="${v.universe[0]}" max="${v.universe[1]}" value="${start}">` +
        `<span id="val${i}">${start}</span></div>`
    );
    $(`var${i}`).addEventListener("input", updateFuzzy);
  });
}

function updateFuzzy() {
  const values = PIPELINE.fuzzifier.variables.map((_, i) => {
    const v = $(`var${i}`).value;
    $(`val${i}`).textContent = v;
    return v;
  });
  try {
    const view = JSON.parse(fuzzify_and_run(JSON.stringify(PIPELINE), values.join(" ")));
    $("chain").textContent = `chain: (${view.chain.join(", ")})\n${view.trace.decision}`;
    renderMatrix(view.trace, view.trace.steps.length, $("fmatrix"));
  } catch (e) {
    $("chain").textContent = String(e);
  }
}

await init();
$("cfg").value = JSON.stringify(REFERENCE, null, 2);
$("cfg").addEventListener("input", updateTrace);
$("symbols").addEventListener("input", updateTrace);
$("step").addEventListener("input", showStep);
for (const id of ["tau", "gamma", "n", "I", "J", "K", "L", "global"]) {
  $(id).addEventListener("input", updateCost);
}
updateTrace();
$("step").value = $("step").max;
showStep();
updateCost();
buildSliders();
updateFuzzy();
