// Generated by tools/embed_fixtures.py from fixtures/. Do not edit.

#ifndef GAPSCHED_FIXTURE_DATA_HPP_
#define GAPSCHED_FIXTURE_DATA_HPP_

#include <array>
#include <string_view>
#include <utility>

namespace gapsched::fixture_data {

inline constexpr std::array<std::pair<std::string_view, std::string_view>, 7> kFiles{{
    {"dyn3.json", R"fx({
  "dynamic_tasks": [
    {
      "id": "TD1",
      "title": "TD1",
      "release": "2009-01-02T10:00:00Z",
      "due": "2009-01-02T11:00:00Z"
    },
    {
      "id": "TD2",
      "title": "TD2",
      "release": "2009-01-02T17:00:00Z",
      "due": "2009-01-04T08:00:00Z"
    },
    {
      "id": "TD3",
      "title": "TD3",
      "release": "2009-01-04T23:00:00Z",
      "due": "2009-01-05T07:00:00Z"
    }
  ]
}
)fx"},
    {"dyn9.json", R"fx({
  "dynamic_tasks": [
    {
      "id": "TD1",
      "title": "TD1",
      "release": "2009-01-02T10:00:00Z",
      "due": "2009-01-02T11:00:00Z"
    },
    {
      "id": "TD2",
      "title": "TD2",
      "release": "2009-01-02T17:00:00Z",
      "due": "2009-01-04T08:00:00Z"
    },
    {
      "id": "TD3",
      "title": "TD3",
      "release": "2009-01-04T23:00:00Z",
      "due": "2009-01-05T07:00:00Z"
    },
    {
      "id": "TD4",
      "title": "TD4",
      "release": "2009-01-04T16:00:00Z",
      "due": "2009-01-04T17:00:00Z"
    },
    {
      "id": "TD5",
      "title": "TD5",
      "release": "2009-01-05T16:00:00Z",
      "due": "2009-01-05T18:00:00Z"
    },
    {
      "id": "TD6",
      "title": "TD6",
      "release": "2009-01-06T20:00:00Z",
      "due": "2009-01-06T23:00:00Z"
    },
    {
      "id": "TD7",
      "title": "TD7",
      "release": "2009-01-07T08:00:00Z",
      "due": "2009-01-07T17:00:00Z"
    },
    {
      "id": "TD8",
      "title": "TD8",
      "release": "2009-01-08T15:00:00Z",
      "due": "2009-01-08T23:00:00Z"
    },
    {
      "id": "TD9",
      "title": "TD9",
      "release": "2009-01-09T18:00:00Z",
      "due": "2009-01-09T20:00:00Z"
    }
  ]
}
)fx"},
    {"replay_run3dyn.json", R"fx({
  "name": "run3dyn",
  "scenario": "tableau1.json",
  "dynamics": "dyn3.json",
  "published": {
    "placements": [
      {
        "task_id": "T1",
        "start": "2009-01-02T08:00:00Z",
        "end": "2009-01-02T10:00:00Z",
        "resource_id": "R7",
        "printed_cost": 200
      },
      {
        "task_id": "TD1",
        "start": "2009-01-02T10:00:00Z",
        "end": "2009-01-02T11:00:00Z",
        "resource_id": "R2",
        "printed_cost": 100
      },
      {
        "task_id": "T2",
        "start": "2009-01-02T12:00:00Z",
        "end": "2009-01-02T16:00:00Z",
        "resource_id": "R4",
        "printed_cost": 400
      },
      {
        "task_id": "TD2",
        "start": "2009-01-02T17:00:00Z",
        "end": "2009-01-04T08:00:00Z",
        "resource_id": "R9",
        "printed_cost": 3900
      },
      {
        "task_id": "T3",
        "start": "2009-01-04T08:00:00Z",
        "end": "2009-01-04T16:00:00Z",
        "resource_id": "R2",
        "printed_cost": 800
      },
      {
        "task_id": "T4",
        "start": "2009-01-04T18:00:00Z",
        "end": "2009-01-04T22:00:00Z",
        "resource_id": "R3",
        "printed_cost": 400
      },
      {
        "task_id": "TD3",
        "start": "2009-01-04T23:00:00Z",
        "end": "2009-01-05T07:00:00Z",
        "resource_id": "R5",
        "printed_cost": 800
      },
      {
        "task_id": "T5",
        "start": "2009-01-05T08:00:00Z",
        "end": "2009-01-05T16:00:00Z",
        "resource_id": "R9",
        "printed_cost": 800
      },
      {
        "task_id": "T6",
        "start": "2009-01-06T08:00:00Z",
        "end": "2009-01-06T13:00:00Z",
        "resource_id": "R6",
        "printed_cost": 500
      },
      {
        "task_id": "T7",
        "start": "2009-01-06T15:00:00Z",
        "end": "2009-01-06T19:00:00Z",
        "resource_id": "R8",
        "printed_cost": 400
      },
      {
        "task_id": "T8",
        "start": "2009-01-07T21:00:00Z",
        "end": "2009-01-07T22:00:00Z",
        "resource_id": "R10",
        "printed_cost": 100
      },
      {
        "task_id": "T9",
        "start": "2009-01-08T07:00:00Z",
        "end": "2009-01-08T14:00:00Z",
        "resource_id": "R5",
        "printed_cost": 700
      },
      {
        "task_id": "T10",
        "start": "2009-01-09T14:00:00Z",
        "end": "2009-01-09T17:00:00Z",
        "resource_id": "R1",
        "printed_cost": 300
      }
    ],
    "printed_window_costs": null,
    "printed_totals": {
      "window": 8300,
      "task": 9000,
      "global": 17300
    },
    "printed_reduction_percent": 37
  },
  "expected": {
    "total_window_cost": 8300,
    "gap_hours": [
      0,
      1,
      1,
      0,
      2,
      1,
      1,
      16,
      2,
      26,
      9,
      24
    ]
  }
}
)fx"},
    {"replay_run9dyn.json", R"fx({
  "name": "run9dyn",
  "scenario": "tableau1.json",
  "dynamics": "dyn9.json",
  "published": {
    "placements": [
      {
        "task_id": "T1",
        "start": "2009-01-02T08:00:00Z",
        "end": "2009-01-02T10:00:00Z",
        "resource_id": "R7",
        "printed_cost": 200
      },
      {
        "task_id": "TD1",
        "start": "2009-01-02T10:00:00Z",
        "end": "2009-01-02T11:00:00Z",
        "resource_id": "R1",
        "printed_cost": 300
      },
      {
        "task_id": "T2",
        "start": "2009-01-02T12:00:00Z",
        "end": "2009-01-02T16:00:00Z",
        "resource_id": "R4",
        "printed_cost": 400
      },
      {
        "task_id": "TD2",
        "start": "2009-01-02T17:00:00Z",
        "end": "2009-01-04T08:00:00Z",
        "resource_id": "R2",
        "printed_cost": 3900
      },
      {
        "task_id": "T3",
        "start": "2009-01-04T08:00:00Z",
        "end": "2009-01-04T16:00:00Z",
        "resource_id": "R2",
        "printed_cost": 800
      },
      {
        "task_id": "TD4",
        "start": "2009-01-04T16:00:00Z",
        "end": "2009-01-04T17:00:00Z",
        "resource_id": "R7",
        "printed_cost": 200
      },
      {
        "task_id": "T4",
        "start": "2009-01-04T18:00:00Z",
        "end": "2009-01-04T22:00:00Z",
        "resource_id": "R3",
        "printed_cost": 400
      },
      {
        "task_id": "TD3",
        "start": "2009-01-04T23:00:00Z",
        "end": "2009-01-05T07:00:00Z",
        "resource_id": "R5",
        "printed_cost": null
      },
      {
        "task_id": "T5",
        "start": "2009-01-05T08:00:00Z",
        "end": "2009-01-05T16:00:00Z",
        "resource_id": "R9",
        "printed_cost": 800
      },
      {
        "task_id": "TD5",
        "start": "2009-01-05T16:00:00Z",
        "end": "2009-01-05T18:00:00Z",
        "resource_id": "R3",
        "printed_cost": 200
      },
      {
        "task_id": "T6",
        "start": "2009-01-06T08:00:00Z",
        "end": "2009-01-06T13:00:00Z",
        "resource_id": "R6",
        "printed_cost": 500
      },
      {
        "task_id": "T7",
        "start": "2009-01-06T15:00:00Z",
        "end": "2009-01-06T19:00:00Z",
        "resource_id": "R8",
        "printed_cost": 400
      },
      {
        "task_id": "TD6",
        "start": "2009-01-06T20:00:00Z",
        "end": "2009-01-06T23:00:00Z",
        "resource_id": "R8",
        "printed_cost": 300
      },
      {
        "task_id": "TD7",
        "start": "2009-01-07T08:00:00Z",
        "end": "2009-01-07T17:00:00Z",
        "resource_id": "R9",
        "printed_cost": 900
      },
      {
        "task_id": "T8",
        "start": "2009-01-07T21:00:00Z",
        "end": "2009-01-07T22:00:00Z",
        "resource_id": "R10",
        "printed_cost": 100
      },
      {
        "task_id": "T9",
        "start": "2009-01-08T07:00:00Z",
        "end": "2009-01-08T14:00:00Z",
        "resource_id": "R5",
        "printed_cost": 700
      },
      {
        "task_id": "TD8",
        "start": "2009-01-08T15:00:00Z",
        "end": "2009-01-08T23:00:00Z",
        "resource_id": "R6",
        "printed_cost": 800
      },
      {
        "task_id": "T10",
        "start": "2009-01-09T14:00:00Z",
        "end": "2009-01-09T17:00:00Z",
        "resource_id": "R1",
        "printed_cost": 300
      },
      {
        "task_id": "TD9",
        "start": "2009-01-09T18:00:00Z",
        "end": "2009-01-09T20:00:00Z",
        "resource_id": "R4",
        "printed_cost": 100
      }
    ],
    "printed_window_costs": [
      0,
      100,
      100,
      0,
      0,
      100,
      100,
      100,
      0,
      1400,
      200,
      100,
      900,
      400,
      900,
      100,
      1500,
      100
    ],
    "printed_totals": {
      "window": 6100,
      "task": 10000,
      "global": 16100
    },
    "printed_reduction_percent": 54
  },
  "expected": {
    "total_window_cost": 6100,
    "gap_hours": [
      0,
      1,
      1,
      0,
      0,
      1,
      1,
      1,
      0,
      14,
      2,
      1,
      9,
      4,
      9,
      1,
      15,
      1
    ]
  }
}
)fx"},
    {"replay_tableau1.json", R"fx({
  "name": "tableau1",
  "scenario": "tableau1.json",
  "published": {
    "placements": [
      {
        "task_id": "T1",
        "start": "2009-01-02T08:00:00Z",
        "end": "2009-01-02T10:00:00Z",
        "resource_id": "R7",
        "printed_cost": 200,
        "printed_resource": "R8"
      },
      {
        "task_id": "T2",
        "start": "2009-01-02T12:00:00Z",
        "end": "2009-01-02T16:00:00Z",
        "resource_id": "R4",
        "printed_cost": 400,
        "printed_resource": "R7"
      },
      {
        "task_id": "T3",
        "start": "2009-01-04T08:00:00Z",
        "end": "2009-01-04T16:00:00Z",
        "resource_id": "R2",
        "printed_cost": 800,
        "printed_resource": "R2"
      },
      {
        "task_id": "T4",
        "start": "2009-01-04T18:00:00Z",
        "end": "2009-01-04T22:00:00Z",
        "resource_id": "R3",
        "printed_cost": 400,
        "printed_resource": "R3"
      },
      {
        "task_id": "T5",
        "start": "2009-01-05T08:00:00Z",
        "end": "2009-01-05T16:00:00Z",
        "resource_id": "R9",
        "printed_cost": 800,
        "printed_resource": "R9"
      },
      {
        "task_id": "T6",
        "start": "2009-01-06T08:00:00Z",
        "end": "2009-01-06T13:00:00Z",
        "resource_id": "R6",
        "printed_cost": 500,
        "printed_resource": "R6"
      },
      {
        "task_id": "T7",
        "start": "2009-01-06T15:00:00Z",
        "end": "2009-01-06T19:00:00Z",
        "resource_id": "R8",
        "printed_cost": 400,
        "printed_resource": "R4"
      },
      {
        "task_id": "T8",
        "start": "2009-01-07T21:00:00Z",
        "end": "2009-01-07T22:00:00Z",
        "resource_id": "R10",
        "printed_cost": 100,
        "printed_resource": "R10"
      },
      {
        "task_id": "T9",
        "start": "2009-01-08T07:00:00Z",
        "end": "2009-01-08T14:00:00Z",
        "resource_id": "R5",
        "printed_cost": 700,
        "printed_resource": "R5"
      },
      {
        "task_id": "T10",
        "start": "2009-01-09T14:00:00Z",
        "end": "2009-01-09T17:00:00Z",
        "resource_id": "R1",
        "printed_cost": 300,
        "printed_resource": "R1"
      }
    ],
    "printed_window_costs": [
      200,
      4000,
      200,
      1100,
      1500,
      200,
      2600,
      900,
      2400
    ],
    "printed_totals": {
      "window": 13100,
      "task": null,
      "global": null
    },
    "printed_reduction_percent": null
  },
  "expected": {
    "total_window_cost": 13100,
    "gap_hours": [
      2,
      40,
      2,
      10,
      16,
      2,
      26,
      9,
      24
    ]
  }
}
)fx"},
    {"tableau1.csv", R"fx(N°Taches	Durée (H)	Début	Fin	Coût(dhs)	tom Ressourc	type taches
1	2	2/1/09 8:00	2/1/09 10:00	200	R8=15,75	preventive
2	4	2/1/09 12:00	2/1/09 16:00	400	R7=8	preventive
3	8	4/1/09 8:00	4/1/09 16:00	800	R2=19	preventive
4	4	4/1/09 18:00	4/1/09 22:00	400	R3=15	preventive
5	8	5/1/09 8:00	5/1/09 16:00	800	R9=18	preventive
6	5	6/1/09 8:00	6/1/09 13:00	500	R6=16	preventive
7	4	6/1/09 15:00	6/1/09 19:00	400	R4=14	preventive
8	1	7/1/09 21:00	7/1/09 22:00	100	R10=6	preventive
9	7	8/1/09 7:00	8/1/09 14:00	700	R5=17	preventive
10	3	9/1/09 14:00	9/1/09 17:00	300	R1=12,5	preventive
)fx"},
    {"tableau1.json", R"fx({
  "epoch": "2009-01-02T08:00:00Z",
  "horizon": {
    "start": "2009-01-02T08:00:00Z",
    "end": "2009-01-09T17:00:00Z"
  },
  "cost_params": {
    "hourly_rate": 100,
    "currency": "DHS",
    "penalty_mode": false
  },
  "policy": "first_fit",
  "resources": [
    {
      "id": "R1",
      "note": 12.5
    },
    {
      "id": "R2",
      "note": 19
    },
    {
      "id": "R3",
      "note": 15
    },
    {
      "id": "R4",
      "note": 14
    },
    {
      "id": "R5",
      "note": 17
    },
    {
      "id": "R6",
      "note": 16
    },
    {
      "id": "R7",
      "note": 8
    },
    {
      "id": "R8",
      "note": 15.75
    },
    {
      "id": "R9",
      "note": 18
    },
    {
      "id": "R10",
      "note": 6
    }
  ],
  "preventive_tasks": [
    {
      "id": "T1",
      "title": "T1",
      "release": "2009-01-02T08:00:00Z",
      "due": "2009-01-02T10:00:00Z"
    },
    {
      "id": "T2",
      "title": "T2",
      "release": "2009-01-02T12:00:00Z",
      "due": "2009-01-02T16:00:00Z"
    },
    {
      "id": "T3",
      "title": "T3",
      "release": "2009-01-04T08:00:00Z",
      "due": "2009-01-04T16:00:00Z"
    },
    {
      "id": "T4",
      "title": "T4",
      "release": "2009-01-04T18:00:00Z",
      "due": "2009-01-04T22:00:00Z"
    },
    {
      "id": "T5",
      "title": "T5",
      "release": "2009-01-05T08:00:00Z",
      "due": "2009-01-05T16:00:00Z"
    },
    {
      "id": "T6",
      "title": "T6",
      "release": "2009-01-06T08:00:00Z",
      "due": "2009-01-06T13:00:00Z"
    },
    {
      "id": "T7",
      "title": "T7",
      "release": "2009-01-06T15:00:00Z",
      "due": "2009-01-06T19:00:00Z"
    },
    {
      "id": "T8",
      "title": "T8",
      "release": "2009-01-07T21:00:00Z",
      "due": "2009-01-07T22:00:00Z"
    },
    {
      "id": "T9",
      "title": "T9",
      "release": "2009-01-08T07:00:00Z",
      "due": "2009-01-08T14:00:00Z"
    },
    {
      "id": "T10",
      "title": "T10",
      "release": "2009-01-09T14:00:00Z",
      "due": "2009-01-09T17:00:00Z"
    }
  ],
  "dynamic_tasks": []
}
)fx"},
}};

}  // namespace gapsched::fixture_data

#endif  // GAPSCHED_FIXTURE_DATA_HPP_
