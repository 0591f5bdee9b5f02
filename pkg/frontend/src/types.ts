// Typed mirrors of the API's JSON payloads. Field names are the wire names;
// the UI never derives any of these numbers itself.

export type InnovationCategory =
  | "sustaining"
  | "incremental"
  | "disruptive"
  | "transformative";

export type StageState =
  | "draft"
  | "categorized"
  | "scored"
  | "roadmapped"
  | "in_execution"
  | "value_realized"
  | "returned_for_refinement"
  | "rejected";

export type EventKind =
  | "categorize"
  | "submit_scores"
  | "gate_pass"
  | "gate_return"
  | "roadmap"
  | "approve_execution"
  | "declare_value_realized"
  | "resubmit"
  | "reject";

export type McSemantics = "residual_incident" | "prevented_event";

export const SCORE_DIMENSIONS = [
  "revenue",
  "cost_efficiency",
  "operational_efficiency",
  "risk_mitigation",
  "trust_building",
  "strategic_alignment",
] as const;

export type ScoreDimension = (typeof SCORE_DIMENSIONS)[number];

export interface Scorecard {
  scorer_id: string;
  revenue: number;
  cost_efficiency: number;
  operational_efficiency: number;
  risk_mitigation: number;
  trust_building: number;
  strategic_alignment: number;
  submitted_at: string;
}

export interface EffortImpactEstimate {
  effort: number;
  impact: number;
  effort_notes: string;
  impact_notes: string;
}

export interface McConfig {
  c_incident: number;
  p_incident: number;
  c_investment: number;
  r_investment: number;
  n: number;
  seed: number;
  semantics: McSemantics;
}

export interface Idea {
  id: string;
  title: string;
  description: string;
  category: InnovationCategory;
  originator: string;
  stage: StageState;
  created_at: string;
  updated_at: string;
  scorecards: Scorecard[];
  civps_threshold_override: number | null;
  estimate: EffortImpactEstimate | null;
  quant_inputs: unknown | null;
  mc_config: McConfig | null;
}

export interface CIVPSResult {
  per_dimension_mean: Record<ScoreDimension, number>;
  overall: number;
  scorer_count: number;
}

export interface GateOutcome {
  decision: "pass" | "return_for_refinement";
  threshold_used: number;
}

export interface CivpsResponse {
  idea_id: string;
  result: CIVPSResult;
  gate: GateOutcome;
}

export interface QuadrantDecision {
  quadrant: "quick_win" | "risky_venture" | "reassess_scope" | "conditional_go";
  rationale: string;
}

export interface Recommendation {
  proceed: "yes" | "no" | "conditional";
  conditions: string[];
}

export interface IdeaDetail extends Idea {
  legal_events: EventKind[];
  civps: CIVPSResult | null;
  decision: QuadrantDecision | null;
  recommendation: Recommendation | null;
}

export interface IdeaListResponse {
  total: number;
  ideas: Idea[];
}

export interface HistogramBin {
  savings: number;
  count: number;
}

export interface SimulateResponse {
  mean_bv: number;
  std_dev: number;
  percentiles: Record<string, number>;
  prevented_count: number;
  n: number;
  seed: number;
  semantics: McSemantics;
  generator_id: string;
  config: McConfig;
  expected_bv: number;
  histogram: HistogramBin[];
}

export interface SimulateRequest {
  c_incident: number;
  p_incident: number;
  c_investment: number;
  r_investment: number;
  n?: number | null;
  seed: number;
  semantics?: McSemantics | null;
}

export interface AdvanceRequest {
  kind: EventKind;
  actor: string;
  category?: InnovationCategory | null;
  estimate?: Partial<EffortImpactEstimate> | null;
}

export interface AdvanceResponse {
  idea: Idea;
  event: { kind: EventKind; actor: string; at: string };
}

export interface QuadrantPoint {
  idea_id: string;
  title: string;
  effort: number;
  impact: number;
  decision: QuadrantDecision;
}

export interface QuadrantsResponse {
  points: QuadrantPoint[];
}

export interface AllocationTargetPayload {
  fractions: Record<InnovationCategory, number>;
}

export interface PortfolioReport {
  total_ideas: number;
  counts: Record<InnovationCategory, number>;
  fractions: Record<InnovationCategory, number>;
  target: AllocationTargetPayload;
  deviations: Record<InnovationCategory, number>;
  empty: boolean;
}

export interface AllocationResponse {
  live: PortfolioReport;
  executed: PortfolioReport;
}

export interface ScorecardCreate {
  scorer_id: string;
  revenue: number;
  cost_efficiency: number;
  operational_efficiency: number;
  risk_mitigation: number;
  trust_building: number;
  strategic_alignment: number;
}

export interface IdeaCreate {
  title: string;
  description?: string;
  category: InnovationCategory;
  originator: string;
}

export interface ApiErrorBody {
  status: number;
  code: string;
  message: string;
  path: string | null;
}
