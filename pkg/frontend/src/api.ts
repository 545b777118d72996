/** Typed client for the query service. Field names and error shapes follow
 * the HTTP contract exactly; degrees stay strings end to end.
 */

export interface SchemaColumn {
  name: string;
  kind: "numeric" | "text";
  variable?: string;
  min?: string;
  max?: string;
  normalization?: NormalizationEntry;
}

export interface NormalizationEntry {
  min: number;
  max: number;
  reversed: boolean;
}

export interface SchemaResponse {
  columns: SchemaColumn[];
  version: number;
}

export interface QueryEntry {
  id: number;
  display: Record<string, string>;
  degree: string;
  degree_exact: string;
}

export interface QueryResponse {
  entries: QueryEntry[];
  version: number;
}

export interface ApiErrorBody {
  code: "syntax_error" | "unbound_variable" | "invalid_spec" | "unknown_row" | "internal";
  message: string;
  span?: { start: number; end: number };
}

export class ApiError extends Error {
  constructor(public status: number, public body: ApiErrorBody) {
    super(body.message);
  }
}

async function request<T>(url: string, init?: RequestInit): Promise<T> {
  const response = await fetch(url, {
    headers: { "content-type": "application/json" },
    ...init,
  });
  const body = await response.json();
  if (!response.ok) {
    throw new ApiError(response.status, body as ApiErrorBody);
  }
  return body as T;
}

export class ServiceClient {
  constructor(public baseUrl: string) {}

  private url(path: string): string {
    return this.baseUrl.replace(/\/$/, "") + path;
  }

  getSchema(): Promise<SchemaResponse> {
    return request(this.url("/schema"));
  }

  putNormalization(spec: Record<string, NormalizationEntry>): Promise<{ version: number }> {
    return request(this.url("/normalization"), {
      method: "PUT",
      body: JSON.stringify(spec),
    });
  }

  query(formula: string, limit?: number, onlyPositive?: boolean): Promise<QueryResponse> {
    return request(this.url("/query"), {
      method: "POST",
      body: JSON.stringify({
        formula,
        ...(limit !== undefined ? { limit } : {}),
        ...(onlyPositive !== undefined ? { only_positive: onlyPositive } : {}),
      }),
    });
  }

  transpile(
    formula: string,
    table: string,
    projected: string[],
    order: boolean,
  ): Promise<{ sql: string }> {
    return request(this.url("/transpile"), {
      method: "POST",
      body: JSON.stringify({ formula, table, projected, order }),
    });
  }

  synthLiteral(
    body: { q1: number; q2: number } | { delta: number; variable: string },
  ): Promise<{ literal: string; steps: { op: string; k: number }[] }> {
    return request(this.url("/synth-literal"), {
      method: "POST",
      body: JSON.stringify(body),
    });
  }
}
