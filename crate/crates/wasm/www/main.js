import init, { analyze, arrowSvg, census } from "./pkg/doodle_wasm.js";

const $ = (id) => document.getElementById(id);

function fmt(code) {
  return "(" + code.join(", ") + ")";
}

function show(errorEl, f) {
  errorEl.textContent = "";
  try {
    f();
  } catch (e) {
    errorEl.textContent = String(e);
  }
}

function runAnalyze() {
  show($("analyze-error"), () => {
    const { report, arrow, svg } = JSON.parse(analyze($("analyze-input").value));
    const rows = [
      ["letters", report.letters],
      ["proj_lp", fmt(report.proj_lp)],
      ["1-reducible", report.one_reducible],
      ["2-reducible", report.two_reducible],
      ["minimal", report.minimal],
      ["G_ori", fmt(report.g_ori)],
      ["G_unori", fmt(report.g_unori)],
      ["orientation", report.orientation],
      ["orbit", report.orbit.map(fmt).join(" ")],
      ["reverse orbit", report.reverse_orbit.map(fmt).join(" ")],
      ["name", report.name ?? "none"],
      ["arrows", arrow],
    ];
    const dl = $("analyze-out");
    dl.replaceChildren();
    for (const [k, v] of rows) {
      const dt = document.createElement("dt");
      dt.textContent = k;
      const dd = document.createElement("dd");
      dd.textContent = String(v);
      dl.append(dt, dd);
    }
    $("analyze-svg").innerHTML = svg;
  });
}

function runArrow() {
  show($("arrow-error"), () => {
    $("arrow-svg").innerHTML = arrowSvg($("arrow-input").value, $("arrow-mode").value);
  });
}

function runCensus() {
  const n = Number($("census-n").value);
  const t0 = performance.now();
  const doc = JSON.parse(census(n));
  const ms = (performance.now() - t0).toFixed(0);
  const c = doc.counts;
  $("census-summary").textContent =
    `n = ${n}: ${c.lp} left preferred codes, ${c.minimal} minimal, ` +
    `${c.oriented} oriented classes, ${c.unoriented} unoriented classes (${ms} ms).`;
  const gallery = $("census-gallery");
  gallery.replaceChildren();
  for (const cls of doc.classes) {
    const fig = document.createElement("figure");
    fig.innerHTML = cls.svg;
    const cap = document.createElement("figcaption");
    const parts = cls.backward ? `${cls.forward} ${cls.backward}` : `${cls.forward} (reversible)`;
    cap.textContent = `${cls.name} ${fmt(cls.canonical)} ${parts}`;
    fig.append(cap);
    gallery.append(fig);
  }
}

function on(formId, f) {
  $(formId).addEventListener("submit", (e) => {
    e.preventDefault();
    f();
  });
}

await init();
on("analyze-form", runAnalyze);
on("arrow-form", runArrow);
on("census-form", runCensus);
runAnalyze();
runArrow();
runCensus();
