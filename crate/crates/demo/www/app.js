import init, { productDiagram, explorePowers, ratioCurve } from "./pkg/rookmon_demo.js";

const $ = (id) => document.getElementById(id);

function report(outId, fn) {
  const out = $(outId);
  out.classList.remove("err");
  try {
    return fn();
  } catch (e) {
    out.textContent = String(e);
    out.classList.add("err");
    return null;
  }
}

function multiply(ev) {
  ev?.preventDefault();
  $("p-svg").innerHTML = "";
  const res = report("p-out", () => JSON.parse(productDiagram(+$("p-n").value, $("p-x").value, $("p-y").value)));
  if (!res) return;
  $("p-out").textContent = `${$("p-x").value} ${$("p-y").value} = ${res.product}`;
  $("p-svg").innerHTML = res.svg;
}

function powers(ev) {
  ev?.preventDefault();
  $("w-list").innerHTML = "";
  const res = report("w-out", () => JSON.parse(explorePowers(+$("w-n").value, $("w-x").value)));
  if (!res) return;
  $("w-out").textContent = `${res.element}: ${res.classification}; transpose ${res.transpose}`;
  for (const p of res.powers) {
    const fig = document.createElement("figure");
    fig.innerHTML = p.svg;
    const cap = document.createElement("figcaption");
    cap.textContent = `x^${p.j} = ${p.element}`;
    fig.appendChild(cap);
    $("w-list").appendChild(fig);
  }
}

function curve(ev) {
  ev?.preventDefault();
  $("c-svg").innerHTML = "";
  const svg = report("c-out", () => ratioCurve(+$("c-n").value));
  if (!svg) return;
  $("c-out").textContent = "";
  $("c-svg").innerHTML = svg;
}

await init();
$("product-form").addEventListener("submit", multiply);
$("powers-form").addEventListener("submit", powers);
$("curve-form").addEventListener("submit", curve);
multiply();
powers();
curve();
