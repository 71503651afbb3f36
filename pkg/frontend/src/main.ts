import { fetchInfogain, fetchNetwork, fetchRank, postQuery } from "./api.js";
import {
  NetworkPayload,
  RankPayload,
  allAttacks,
  argmaxState,
  attackMenu,
  barPercent,
  comboLabel,
  evidenceForAttacks,
  formatBelief,
  fullPrecision,
  gateSelection,
  makeSequencer,
  targetStates,
  toggleAttack,
} from "./logic.js";

const TARGET = "knowledge";

interface UiState {
  network: NetworkPayload;
  adversary: string;
  selected: string[];
  rankTarget: string;
  tab: "rank" | "infogain";
}

const queries = makeSequencer();
const rankings = makeSequencer();

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) {
    throw new Error(`missing element #${id}`);
  }
  return node as T;
}

function setStatus(message: string): void {
  el<HTMLElement>("status").textContent = message;
}

function renderToggles(state: UiState): void {
  const menu = attackMenu(state.network, state.adversary);
  const box = el<HTMLElement>("attacks");
  box.replaceChildren();
  for (const attack of allAttacks(state.network)) {
    const label = document.createElement("label");
    label.className = "attack-toggle";
    const input = document.createElement("input");
    input.type = "checkbox";
    input.value = attack;
    input.checked = state.selected.includes(attack);
    input.disabled = !menu.includes(attack);
    input.addEventListener("change", () => {
      state.selected = toggleAttack(
        state.selected,
        attack,
        allAttacks(state.network),
      );
      runQuery(state);
    });
    label.append(input, document.createTextNode(attack));
    if (input.disabled) {
      label.classList.add("gated");
    }
    box.append(label);
  }
}

function renderBars(
  state: UiState,
  posterior: Record<string, number>,
): void {
  const states = targetStates(state.network, TARGET);
  const box = el<HTMLElement>("beliefs");
  box.replaceChildren();
  const best = argmaxState(posterior, states);
  for (const s of states) {
    const p = posterior[s] ?? 0;
    const row = document.createElement("div");
    row.className = "belief-row" + (s === best ? " best" : "");
    row.title = fullPrecision(p);

    const name = document.createElement("span");
    name.className = "belief-name";
    name.textContent = s;

    const track = document.createElement("div");
    track.className = "belief-track";
    const fill = document.createElement("div");
    fill.className = "belief-fill";
    fill.style.width = `${barPercent(p)}%`;
    track.append(fill);

    const value = document.createElement("span");
    value.className = "belief-value";
    value.textContent = formatBelief(p);

    row.append(name, track, value);
    box.append(row);
  }
}

async function runQuery(state: UiState): Promise<void> {
  renderToggles(state);
  const ticket = queries.issue();
  try {
    const evidence = evidenceForAttacks(
      state.selected,
      allAttacks(state.network),
    );
    const result = await postQuery(evidence);
    if (!queries.isCurrent(ticket)) {
      return; // a newer toggle already superseded this answer
    }
    renderBars(state, result.posterior);
    setStatus("");
  } catch (err) {
    if (queries.isCurrent(ticket)) {
      setStatus(String(err instanceof Error ? err.message : err));
    }
  }
}

function renderRankTable(state: UiState, payload: RankPayload): void {
  const box = el<HTMLElement>("rank-table");
  box.replaceChildren();
  for (const row of payload.ranking) {
    const line = document.createElement("button");
    line.type = "button";
    line.className = "rank-row";
    const label = document.createElement("span");
    label.textContent = comboLabel(row.attacks);
    const belief = document.createElement("span");
    belief.textContent = formatBelief(row.belief);
    belief.title = fullPrecision(row.belief);
    line.append(label, belief);
    line.addEventListener("click", () => {
      state.selected = [...row.attacks];
      runQuery(state);
    });
    box.append(line);
  }
}

async function loadRanking(state: UiState): Promise<void> {
  const ticket = rankings.issue();
  try {
    const payload = await fetchRank(state.adversary, state.rankTarget);
    if (rankings.isCurrent(ticket)) {
      renderRankTable(state, payload);
    }
  } catch (err) {
    if (rankings.isCurrent(ticket)) {
      setStatus(String(err instanceof Error ? err.message : err));
    }
  }
}

async function loadInfogain(): Promise<void> {
  const payload = await fetchInfogain();
  const box = el<HTMLElement>("infogain-table");
  box.replaceChildren();
  const entries = Object.entries(payload.bits);
  const top = entries.length ? entries[0]![1] : 1;
  for (const [name, bits] of entries) {
    const row = document.createElement("div");
    row.className = "gain-row";
    row.title = fullPrecision(bits);
    const label = document.createElement("span");
    label.textContent = name;
    const track = document.createElement("div");
    track.className = "belief-track";
    const fill = document.createElement("div");
    fill.className = "belief-fill gain";
    fill.style.width = `${barPercent(bits / top)}%`;
    track.append(fill);
    const value = document.createElement("span");
    value.textContent = bits.toFixed(4);
    row.append(label, track, value);
    box.append(row);
  }
}

function showTab(state: UiState): void {
  el<HTMLElement>("panel-rank").hidden = state.tab !== "rank";
  el<HTMLElement>("panel-infogain").hidden = state.tab !== "infogain";
  el<HTMLButtonElement>("tab-rank").classList.toggle("active", state.tab === "rank");
  el<HTMLButtonElement>("tab-infogain").classList.toggle(
    "active",
    state.tab === "infogain",
  );
}

async function start(): Promise<void> {
  setStatus("loading model…");
  const network = await fetchNetwork();
  const state: UiState = {
    network,
    adversary: "3",
    selected: [],
    rankTarget: "high",
    tab: "rank",
  };

  const adversarySelect = el<HTMLSelectElement>("adversary");
  adversarySelect.replaceChildren();
  for (const key of Object.keys(network.adversaries).sort()) {
    const option = document.createElement("option");
    option.value = key;
    option.textContent = `adversary ${key}: ${network.adversaries[key]!.join(", ")}`;
    adversarySelect.append(option);
  }
  adversarySelect.value = state.adversary;
  adversarySelect.addEventListener("change", () => {
    state.adversary = adversarySelect.value;
    state.selected = gateSelection(
      state.selected,
      attackMenu(state.network, state.adversary),
    );
    runQuery(state);
    loadRanking(state);
  });

  const targetSelect = el<HTMLSelectElement>("rank-target");
  targetSelect.replaceChildren();
  for (const s of targetStates(network, TARGET)) {
    const option = document.createElement("option");
    option.value = s;
    option.textContent = `belief in ${s}`;
    targetSelect.append(option);
  }
  targetSelect.value = state.rankTarget;
  targetSelect.addEventListener("change", () => {
    state.rankTarget = targetSelect.value;
    loadRanking(state);
  });

  el<HTMLButtonElement>("tab-rank").addEventListener("click", () => {
    state.tab = "rank";
    showTab(state);
  });
  el<HTMLButtonElement>("tab-infogain").addEventListener("click", () => {
    state.tab = "infogain";
    showTab(state);
  });

  showTab(state);
  await Promise.all([runQuery(state), loadRanking(state), loadInfogain()]);
}

start().catch((err) => {
  setStatus(String(err instanceof Error ? err.message : err));
});
