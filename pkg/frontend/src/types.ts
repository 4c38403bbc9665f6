/**
 * Shapes exchanged with the recommendation service under /api/v1.
 * The service keeps its rule table server-side, so options carry only
 * an id and a label here.
 */

export interface AnswerOption {
  id: string;
  label: string;
}

export interface Question {
  id: string;
  text: string;
  concern: string;
  options: AnswerOption[];
}

export interface QuestionsResponse {
  kb_id: string;
  kb_version: string;
  questions: Question[];
}

export interface Session {
  id: string;
  kb_id: string;
  kb_version: string;
  answers: Record<string, string>;
  created_at: string;
  updated_at: string;
  status: "in_progress" | "completed";
}

export interface Source {
  question_id: string;
  option_id: string;
}

export interface ResolvedItem {
  id: string;
  name: string;
  category: string;
  description: string;
  references: string[];
  sources: Source[];
}

export interface Suppression {
  recommendation_id: string;
  suppressed_sources: Source[];
  winning_question: string;
  group: string;
}

export interface RecommendationsResponse {
  kb_id: string;
  kb_version: string;
  answers: Record<string, string>;
  resolved: Record<string, ResolvedItem[]>;
  suppressions: Suppression[];
  ties: string[];
  matrix: {
    rows: string[];
    columns: string[];
    cells: Record<string, Record<string, string>>;
  };
}

export type ReportFormat = "md" | "html" | "dot";
