// Pure view logic: everything here is a plain function of its inputs,
// so the whole file is testable without a DOM or a server.

export interface VariableInfo {
  name: string;
  states: string[];
}

export interface NetworkPayload {
  variables: VariableInfo[];
  edges: [string, string][];
  adversaries: Record<string, string[]>;
}

export interface QueryResponse {
  target: string;
  evidence: Record<string, string>;
  posterior: Record<string, number>;
}

export interface RankRow {
  attacks: string[];
  belief: number;
}

export interface RankPayload {
  adversary: number;
  target: string;
  ranking: RankRow[];
}

export interface InfogainPayload {
  target: string;
  bits: Record<string, number>;
}

export function attackMenu(network: NetworkPayload, adversary: string): string[] {
  const menu = network.adversaries[adversary];
  if (!menu) {
    throw new Error(`unknown adversary ${adversary}`);
  }
  return menu;
}

// The full menu doubles as the canonical attack order.
export function allAttacks(network: NetworkPayload): string[] {
  return attackMenu(network, "3");
}

export function targetStates(network: NetworkPayload, target: string): string[] {
  const found = network.variables.find((v) => v.name === target);
  if (!found) {
    throw new Error(`unknown variable ${target}`);
  }
  return found.states;
}

// Selecting attacks clamps every attack node: chosen ones to yes, the
// rest to no. An empty selection is still total evidence, all no.
export function evidenceForAttacks(
  selected: string[],
  attacks: string[],
): Record<string, string> {
  const chosen = new Set(selected);
  const evidence: Record<string, string> = {};
  for (const attack of attacks) {
    evidence[attack] = chosen.has(attack) ? "yes" : "no";
  }
  return evidence;
}

export function toggleAttack(
  selected: string[],
  attack: string,
  attacks: string[],
): string[] {
  if (!attacks.includes(attack)) {
    throw new Error(`unknown attack ${attack}`);
  }
  const chosen = new Set(selected);
  if (chosen.has(attack)) {
    chosen.delete(attack);
  } else {
    chosen.add(attack);
  }
  return attacks.filter((a) => chosen.has(a));
}

// Switching adversary drops selections outside the new menu but keeps
// the rest, so narrowing then widening is not destructive.
export function gateSelection(selected: string[], allowed: string[]): string[] {
  const menu = new Set(allowed);
  return selected.filter((a) => menu.has(a));
}

export function formatBelief(p: number): string {
  return p.toFixed(4);
}

// String(n) is the shortest digit string that parses back to the same
// double, so tooltips show exactly what the service sent.
export function fullPrecision(p: number): string {
  return String(p);
}

export function barPercent(p: number): number {
  return Math.max(0, Math.min(100, p * 100));
}

export function argmaxState(
  posterior: Record<string, number>,
  states: string[],
): string {
  let best: string | undefined;
  let bestP = -Infinity;
  for (const state of states) {
    const p = posterior[state];
    if (p !== undefined && p > bestP) {
      best = state;
      bestP = p;
    }
  }
  if (best === undefined) {
    throw new Error("posterior shares no states with the target");
  }
  return best;
}

export function comboLabel(attacks: string[]): string {
  return attacks.join(" + ");
}

export function describeError(status: number, body: unknown): string {
  if (body && typeof body === "object" && "error" in body) {
    const message = (body as { error: unknown }).error;
    if (typeof message === "string") {
      return message;
    }
  }
  return `request failed with status ${status}`;
}

// Answers can come back out of order; a ticket from issue() is only
// worth rendering while it is still the newest one handed out.
export interface Sequencer {
  issue(): number;
  isCurrent(ticket: number): boolean;
}

export function makeSequencer(): Sequencer {
  let latest = 0;
  return {
    issue(): number {
      latest += 1;
      return latest;
    },
    isCurrent(ticket: number): boolean {
      return ticket === latest;
    },
  };
}
