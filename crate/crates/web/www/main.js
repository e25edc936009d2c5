import init, { rootSystem, structureConstant, foldSummary } from "./pkg/chevalley_web.js";

const $ = (id) => document.getElementById(id);

function guarded(out, f) {
  try {
    out.classList.remove("err");
    f();
  } catch (e) {
    out.classList.add("err");
    out.textContent = String(e.message ?? e);
  }
}

function showRootSystem() {
  const out = $("rs-out");
  guarded(out, () => {
    const rs = JSON.parse(rootSystem($("rs-type").value, $("rs-flip").checked));
    const rows = rs.cartan.map((r) => r.map((v) => String(v).padStart(3)).join("")).join("\n");
    const pos = rs.compact.slice(0, rs.positive_count);
    out.textContent =
      `${rs.type_label}: ${rs.roots.length} roots, ${rs.positive_count} positive\n\n` +
      `Cartan matrix\n${rows}\n\neps = [${rs.epsilon.join(", ")}]\n\n` +
      `positive roots\n${pos.join(" ")}`;
  });
}

function showConstant() {
  const out = $("n-out");
  guarded(out, () => {
    const r = JSON.parse(structureConstant($("n-type").value, $("n-flip").checked, $("n-alpha").value, $("n-beta").value));
    const lines = [`alpha = ${r.alpha}, beta = ${r.beta}`];
    if (r.coroot) {
      lines.push(`[e_alpha, e_-alpha] = (-1)^${r.height} h_alpha, h_alpha = [${r.coroot.join(", ")}]`);
    } else if (r.sum === null) {
      lines.push("alpha + beta is not a root, N = 0");
    } else {
      lines.push(`alpha + beta = ${r.sum}`, `p = ${r.p}, q = ${r.q}`, `N = ${r.N}`);
      if (r.closed !== undefined) lines.push(`closed formula: ${r.closed}`);
      if (r.folded !== undefined) lines.push(`orbit sums in ${r.parent}: ${r.folded}`);
    }
    out.textContent = lines.join("\n");
  });
}

function showFold() {
  const out = $("f-out");
  guarded(out, () => {
    const f = JSON.parse(foldSummary($("f-type").value));
    const orbits = f.orbits.map((o) => `{${o.join(",")}}`).join(" ");
    const body = f.rows
      .map((r) => `<tr><td>{${r.members.join(", ")}}</td><td>${r.text.split("  ")[1]}</td></tr>`)
      .join("");
    out.innerHTML =
      `<p>${f.parent} &rarr; ${f.target}, automorphism of order ${f.order}, node orbits ${orbits}</p>` +
      `<table><tr><th>orbit</th><th>restriction</th></tr>${body}</table>`;
  });
}

await init();
$("rs-go").onclick = showRootSystem;
$("n-go").onclick = showConstant;
$("f-go").onclick = showFold;
showRootSystem();
showConstant();
showFold();
