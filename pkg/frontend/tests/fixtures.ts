// Captured verbatim from the HTTP API (see tests in the core package);
// these are the canonical wire payloads the UI consumes.

export const civpsAllTens = {
  "idea_id": "idea-006",
  "result": {
    "per_dimension_mean": {
      "revenue": 10.0,
      "cost_efficiency": 10.0,
      "operational_efficiency": 10.0,
      "risk_mitigation": 10.0,
      "trust_building": 10.0,
      "strategic_alignment": 10.0
    },
    "overall": 10.0,
    "scorer_count": 1
  },
  "gate": {
    "decision": "pass",
    "threshold_used": 6.0
  }
} as const;

export const civpsFoursEights = {
  "idea_id": "idea-007",
  "result": {
    "per_dimension_mean": {
      "revenue": 6.0,
      "cost_efficiency": 6.0,
      "operational_efficiency": 6.0,
      "risk_mitigation": 6.0,
      "trust_building": 6.0,
      "strategic_alignment": 6.0
    },
    "overall": 6.0,
    "scorer_count": 2
  },
  "gate": {
    "decision": "pass",
    "threshold_used": 6.0
  }
} as const;

export const simulateDegenerateR1 = {
  "mean_bv": -100000.0,
  "std_dev": 0.0,
  "percentiles": {
    "5": -100000.0,
    "25": -100000.0,
    "50": -100000.0,
    "75": -100000.0,
    "95": -100000.0
  },
  "prevented_count": 0,
  "n": 100000,
  "seed": 42,
  "semantics": "residual_incident",
  "generator_id": "numpy.PCG64/SeedSequence(seed,chunk_index)/chunk=65536",
  "config": {
    "c_incident": 1000000.0,
    "p_incident": 0.3,
    "c_investment": 100000.0,
    "r_investment": 1.0,
    "n": 100000,
    "seed": 42,
    "semantics": "residual_incident"
  },
  "expected_bv": -100000.0,
  "histogram": [
    {
      "savings": -100000.0,
      "count": 100000
    },
    {
      "savings": 900000.0,
      "count": 0
    }
  ]
} as const;

export const simulateSeed42 = {
  "mean_bv": 48790.0,
  "std_dev": 355881.35087413614,
  "percentiles": {
    "5": -100000.0,
    "25": -100000.0,
    "50": -100000.0,
    "75": -100000.0,
    "95": 900000.0
  },
  "prevented_count": 14879,
  "n": 100000,
  "seed": 42,
  "semantics": "residual_incident",
  "generator_id": "numpy.PCG64/SeedSequence(seed,chunk_index)/chunk=65536",
  "config": {
    "c_incident": 1000000.0,
    "p_incident": 0.3,
    "c_investment": 100000.0,
    "r_investment": 0.5,
    "n": 100000,
    "seed": 42,
    "semantics": "residual_incident"
  },
  "expected_bv": 50000.0,
  "histogram": [
    {
      "savings": -100000.0,
      "count": 85121
    },
    {
      "savings": 900000.0,
      "count": 14879
    }
  ]
} as const;

export const ideaDraft = {
  "id": "idea-010",
  "title": "Idea 010",
  "description": "",
  "category": "incremental",
  "originator": "originator-1",
  "stage": "draft",
  "created_at": "2026-01-01T12:00:00Z",
  "updated_at": "2026-01-01T12:00:00Z",
  "scorecards": [],
  "civps_threshold_override": null,
  "estimate": null,
  "quant_inputs": null,
  "mc_config": null,
  "legal_events": [
    "categorize",
    "reject"
  ],
  "civps": null,
  "decision": null,
  "recommendation": null
} as const;

export const ideaCategorizedScored = {
  "id": "idea-007",
  "title": "Idea 007",
  "description": "",
  "category": "sustaining",
  "originator": "originator-1",
  "stage": "categorized",
  "created_at": "2026-01-01T12:00:00Z",
  "updated_at": "2026-08-09T23:10:15.697326Z",
  "scorecards": [
    {
      "scorer_id": "m-a",
      "revenue": 4,
      "cost_efficiency": 4,
      "operational_efficiency": 4,
      "risk_mitigation": 4,
      "trust_building": 4,
      "strategic_alignment": 4,
      "submitted_at": "2026-08-09T23:10:15.689847Z"
    },
    {
      "scorer_id": "m-b",
      "revenue": 8,
      "cost_efficiency": 8,
      "operational_efficiency": 8,
      "risk_mitigation": 8,
      "trust_building": 8,
      "strategic_alignment": 8,
      "submitted_at": "2026-08-09T23:10:15.697326Z"
    }
  ],
  "civps_threshold_override": null,
  "estimate": null,
  "quant_inputs": null,
  "mc_config": null,
  "legal_events": [
    "submit_scores",
    "gate_pass",
    "gate_return",
    "reject"
  ],
  "civps": {
    "per_dimension_mean": {
      "revenue": 6.0,
      "cost_efficiency": 6.0,
      "operational_efficiency": 6.0,
      "risk_mitigation": 6.0,
      "trust_building": 6.0,
      "strategic_alignment": 6.0
    },
    "overall": 6.0,
    "scorer_count": 2
  },
  "decision": null,
  "recommendation": null
} as const;

export const ideaRoadmapped = {
  "id": "idea-001",
  "title": "Idea 001",
  "description": "",
  "category": "sustaining",
  "originator": "originator-1",
  "stage": "roadmapped",
  "created_at": "2026-01-01T12:00:00Z",
  "updated_at": "2026-01-01T13:03:00Z",
  "scorecards": [
    {
      "scorer_id": "member-1",
      "revenue": 8,
      "cost_efficiency": 6,
      "operational_efficiency": 7,
      "risk_mitigation": 9,
      "trust_building": 5,
      "strategic_alignment": 7,
      "submitted_at": "2026-01-01T13:01:00Z"
    }
  ],
  "civps_threshold_override": null,
  "estimate": {
    "effort": 2,
    "impact": 2,
    "effort_notes": "",
    "impact_notes": ""
  },
  "quant_inputs": null,
  "mc_config": null,
  "legal_events": [
    "approve_execution",
    "reject"
  ],
  "civps": {
    "per_dimension_mean": {
      "revenue": 8.0,
      "cost_efficiency": 6.0,
      "operational_efficiency": 7.0,
      "risk_mitigation": 9.0,
      "trust_building": 5.0,
      "strategic_alignment": 7.0
    },
    "overall": 7.0,
    "scorer_count": 1
  },
  "decision": {
    "quadrant": "quick_win",
    "rationale": "effort 2 is low (<= 5 counts as low); impact 2 is low (<= 5 counts as low)"
  },
  "recommendation": {
    "proceed": "yes",
    "conditions": [
      "moderate CIVPS suffices"
    ]
  }
} as const;

export const quadrants = {
  "points": [
    {
      "idea_id": "idea-001",
      "title": "Idea 001",
      "effort": 2,
      "impact": 2,
      "decision": {
        "quadrant": "quick_win",
        "rationale": "effort 2 is low (<= 5 counts as low); impact 2 is low (<= 5 counts as low)"
      }
    },
    {
      "idea_id": "idea-002",
      "title": "Idea 002",
      "effort": 8,
      "impact": 8,
      "decision": {
        "quadrant": "risky_venture",
        "rationale": "effort 8 is high (<= 5 counts as low); impact 8 is high (<= 5 counts as low)"
      }
    },
    {
      "idea_id": "idea-003",
      "title": "Idea 003",
      "effort": 8,
      "impact": 2,
      "decision": {
        "quadrant": "reassess_scope",
        "rationale": "effort 8 is high (<= 5 counts as low); impact 2 is low (<= 5 counts as low)"
      }
    },
    {
      "idea_id": "idea-004",
      "title": "Idea 004",
      "effort": 2,
      "impact": 8,
      "decision": {
        "quadrant": "conditional_go",
        "rationale": "effort 2 is low (<= 5 counts as low); impact 8 is high (<= 5 counts as low)"
      }
    },
    {
      "idea_id": "idea-005",
      "title": "Idea 005",
      "effort": 3,
      "impact": 3,
      "decision": {
        "quadrant": "quick_win",
        "rationale": "effort 3 is low (<= 5 counts as low); impact 3 is low (<= 5 counts as low)"
      }
    }
  ]
} as const;

export const allocation = {
  "live": {
    "total_ideas": 20,
    "counts": {
      "sustaining": 9,
      "incremental": 8,
      "disruptive": 2,
      "transformative": 1
    },
    "fractions": {
      "sustaining": 0.45,
      "incremental": 0.4,
      "disruptive": 0.1,
      "transformative": 0.05
    },
    "target": {
      "fractions": {
        "disruptive": 0.1,
        "incremental": 0.4,
        "sustaining": 0.45,
        "transformative": 0.05
      }
    },
    "deviations": {
      "sustaining": 0.0,
      "incremental": 0.0,
      "disruptive": 0.0,
      "transformative": 0.0
    },
    "empty": false
  },
  "executed": {
    "total_ideas": 1,
    "counts": {
      "sustaining": 1,
      "incremental": 0,
      "disruptive": 0,
      "transformative": 0
    },
    "fractions": {
      "sustaining": 1.0,
      "incremental": 0.0,
      "disruptive": 0.0,
      "transformative": 0.0
    },
    "target": {
      "fractions": {
        "disruptive": 0.1,
        "incremental": 0.4,
        "sustaining": 0.45,
        "transformative": 0.05
      }
    },
    "deviations": {
      "sustaining": 0.55,
      "incremental": -0.4,
      "disruptive": -0.1,
      "transformative": -0.05
    },
    "empty": false
  }
} as const;

export const ideaList = {
  "total": 3,
  "ideas": [
    {
      "id": "idea-010",
      "title": "Idea 010",
      "description": "",
      "category": "incremental",
      "originator": "originator-1",
      "stage": "draft",
      "created_at": "2026-01-01T12:00:00Z",
      "updated_at": "2026-01-01T12:00:00Z",
      "scorecards": [],
      "civps_threshold_override": null,
      "estimate": null,
      "quant_inputs": null,
      "mc_config": null
    },
    {
      "id": "idea-007",
      "title": "Idea 007",
      "description": "",
      "category": "sustaining",
      "originator": "originator-1",
      "stage": "categorized",
      "created_at": "2026-01-01T12:00:00Z",
      "updated_at": "2026-08-09T23:10:15.697326Z",
      "scorecards": [
        {
          "scorer_id": "m-a",
          "revenue": 4,
          "cost_efficiency": 4,
          "operational_efficiency": 4,
          "risk_mitigation": 4,
          "trust_building": 4,
          "strategic_alignment": 4,
          "submitted_at": "2026-08-09T23:10:15.689847Z"
        },
        {
          "scorer_id": "m-b",
          "revenue": 8,
          "cost_efficiency": 8,
          "operational_efficiency": 8,
          "risk_mitigation": 8,
          "trust_building": 8,
          "strategic_alignment": 8,
          "submitted_at": "2026-08-09T23:10:15.697326Z"
        }
      ],
      "civps_threshold_override": null,
      "estimate": null,
      "quant_inputs": null,
      "mc_config": null
    },
    {
      "id": "idea-001",
      "title": "Idea 001",
      "description": "",
      "category": "sustaining",
      "originator": "originator-1",
      "stage": "roadmapped",
      "created_at": "2026-01-01T12:00:00Z",
      "updated_at": "2026-01-01T13:03:00Z",
      "scorecards": [
        {
          "scorer_id": "member-1",
          "revenue": 8,
          "cost_efficiency": 6,
          "operational_efficiency": 7,
          "risk_mitigation": 9,
          "trust_building": 5,
          "strategic_alignment": 7,
          "submitted_at": "2026-01-01T13:01:00Z"
        }
      ],
      "civps_threshold_override": null,
      "estimate": {
        "effort": 2,
        "impact": 2,
        "effort_notes": "",
        "impact_notes": ""
      },
      "quant_inputs": null,
      "mc_config": null
    }
  ]
} as const;

