import {
  InfogainPayload,
  NetworkPayload,
  QueryResponse,
  RankPayload,
  describeError,
} from "./logic.js";

async function parseOrThrow<T>(response: Response): Promise<T> {
  let body: unknown = null;
  try {
    body = await response.json();
  } catch {
    // non-json error bodies fall through to the status message
  }
  if (!response.ok) {
    throw new Error(describeError(response.status, body));
  }
  return body as T;
}

export async function fetchNetwork(): Promise<NetworkPayload> {
  return parseOrThrow(await fetch("/api/network"));
}

export async function postQuery(
  evidence: Record<string, string>,
): Promise<QueryResponse> {
  const response = await fetch("/api/query", {
    method: "POST",
    headers: { "content-type": "application/json" },
    body: JSON.stringify({ evidence }),
  });
  return parseOrThrow(response);
}

export async function fetchRank(
  adversary: string,
  target: string,
): Promise<RankPayload> {
  const params = new URLSearchParams({ adversary, target });
  return parseOrThrow(await fetch(`/api/rank?${params}`));
}

export async function fetchInfogain(): Promise<InfogainPayload> {
  return parseOrThrow(await fetch("/api/infogain"));
}
