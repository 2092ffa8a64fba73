// Build with: wasm-pack build crates/wasm --target web --out-dir www/pkg
import init, { run_script, recognize, construct } from "./pkg/mstruct_wasm.js";

const $ = (id) => document.getElementById(id);

function show(target, json) {
  const res = JSON.parse(json);
  const out = $(target);
  out.textContent = res.text;
  out.classList.toggle("fail", !res.ok);
}

await init();

$("run").onclick = () => show("script-out", run_script($("script").value));
$("recognize").onclick = () =>
  show("recognize-out", recognize($("vars").value, $("gens").value));
$("construct").onclick = () =>
  show("construct-out", construct(Number($("n").value), $("case").value, $("alphas").value));
