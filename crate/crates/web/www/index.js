import init, { enumerate, radix, delay_profile } from "./pkg/lexenum_web.js";

const $ = (id) => document.getElementById(id);

function source() {
  const isRegex = document.querySelector("input[name=kind]:checked").value === "regex";
  return [isRegex ? $("regex").value : $("nfa").value, isRegex];
}

function numbers() {
  return [Math.max(0, $("length").valueAsNumber | 0), Math.max(1, $("limit").valueAsNumber | 0)];
}

function show(words, summary) {
  $("error").textContent = "";
  $("out").textContent = words;
  $("summary").textContent = summary;
}

function guard(f) {
  return () => {
    try {
      f();
    } catch (e) {
      $("error").textContent = String(e);
      $("out").textContent = "";
      $("summary").textContent = "";
      $("chart").hidden = true;
    }
  };
}

function count(text) {
  return text === "" ? 0 : text.split("\n").length;
}

function drawDelays(delays, preproc) {
  const c = $("chart");
  c.hidden = false;
  const ctx = c.getContext("2d");
  const w = c.width, h = c.height, pad = 24;
  ctx.clearRect(0, 0, w, h);
  if (delays.length === 0) return;
  const max = Math.max(...delays);
  const bar = (w - pad) / delays.length;
  ctx.fillStyle = "#4a7bd0";
  delays.forEach((d, i) => {
    const y = (h - pad) * (d / max);
    ctx.fillRect(pad + i * bar, h - pad - y, Math.max(1, bar - 1), y);
  });
  ctx.fillStyle = "#333";
  ctx.fillText(`max ${max} ops`, pad + 4, 12);
  ctx.fillText(`preprocessing ${preproc} ops`, w / 2, 12);
  ctx.fillText("output index →", w - 100, h - 6);
}

function wire() {
  for (const r of document.querySelectorAll("input[name=kind]")) {
    r.addEventListener("change", () => {
      const isRegex = source()[1];
      $("regex").hidden = !isRegex;
      $("nfa").hidden = isRegex;
    });
  }

  $("enum").addEventListener("click", guard(() => {
    const [len, limit] = numbers();
    const words = enumerate(...source(), len, limit);
    $("chart").hidden = true;
    show(words, `${count(words)} word(s) of length ${len}`);
  }));

  $("radix").addEventListener("click", guard(() => {
    const [len, limit] = numbers();
    const words = radix(...source(), len, limit);
    $("chart").hidden = true;
    show(words, `${count(words)} word(s) of length ≤ ${len}`);
  }));

  $("profile").addEventListener("click", guard(() => {
    const [len, limit] = numbers();
    const p = delay_profile(...source(), len, limit);
    const delays = Array.from(p.delays);
    const tail = p.exhausted ? `, exhausted after ${p.tail_ops} more ops` : "";
    show(p.words, `|Q|=${p.states} |Δ|=${p.transitions}: ${delays.length} output(s)${tail}`);
    drawDelays(delays, p.preproc_ops);
    p.free();
  }));
}

init().then(wire);
