import init, { criterion_grid, q_module_summary, margolis_profile } from "./pkg/bgq_wasm.js";

const $ = (id) => document.getElementById(id);
const num = (id) => Number($(id).value);

function bind(button, out, compute) {
  $(button).addEventListener("click", () => {
    const target = $(out);
    try {
      target.classList.remove("error");
      target.textContent = compute();
    } catch (e) {
      target.classList.add("error");
      target.textContent = String(e);
    }
  });
}

await init();
bind("grid-go", "grid-out", () => criterion_grid(num("grid-n"), num("grid-m")));
bind("q-go", "q-out", () => q_module_summary(num("q-n"), num("q-m")));
bind("j-go", "j-out", () => margolis_profile(num("j-n"), num("j-k")));
$("grid-go").click();
