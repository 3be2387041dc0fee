import init, { hook_schur, character, tensor } from "./pkg/superchar_web.js";

const $ = (id) => document.getElementById(id);
const num = (id) => Number($(id).value);

function show(out, json, render) {
  const v = JSON.parse(json);
  out.classList.toggle("err", "error" in v);
  out.textContent = "error" in v ? v.error : render(v);
}

await init();

$("hs-go").onclick = () =>
  show($("hs-out"), hook_schur($("hs-lambda").value, num("hs-m"), num("hs-n")), (v) => v.text);

$("ch-go").onclick = () =>
  show(
    $("ch-out"),
    character($("ch-alg").value, $("ch-lambda").value, num("ch-d"), num("ch-m"), num("ch-n"), num("ch-deg")),
    (v) =>
      `prefactor (y1..ym)^(${v.prefactor.y}) (z1..zn)^(${v.prefactor.z})\n` +
      (v.combined_pair ? "sum over λ and its bar\n" : "") +
      `HS terms: ${v.hs_text}\nseries: ${v.text}`,
  );

$("tp-go").onclick = () =>
  show(
    $("tp-out"),
    tensor($("tp-alg").value, $("tp-mu").value, $("tp-gamma").value,
      num("tp-d"), num("tp-r"), num("tp-m"), num("tp-n"), num("tp-k")),
    (v) =>
      `rank ${v.rank}\n` +
      (v.coefficients.length
        ? v.coefficients.map((c) => `[${c.lambda.join(",")}]  ${c.coeff}`).join("\n")
        : "no constituents with first row ≤ rank"),
  );
