#include "pfolia/tables.hpp"

namespace pfolia {

// Constraint tables for the p-closed inseparable families, kept as data so the
// verifiers can cross-examine them against two independent oracles.  Signs are
// written for the ambient characteristic (everything is + in char 2).
//
// Conventions:
//  - "nonzero" groups: at least one member of each group is nonzero;
//  - "zero" entries vanish (a product encodes "at least one factor is zero");
//  - "eqs": lhs = rhs / prod(den); every den symbol is pinned nonzero by a
//    singleton group of the same row;
//  - a row with "mirror_of" is generated from the named row by the chart swap
//    t -> 1/t (indices reversed: a0<->a2, b0<->b2, c0<->c4, c1<->c3,
//    D01<->D12); the swapped variants are never transcribed by hand.
//
// Delta symbols: p = 2: D01 = a0*b1 + a1*b0, D12 = a1*b2 + a2*b1,
//                       D02 = a0*b2 + a2*b0;
//                p = 3: D = a1*b0 - a0*b1.
const std::string& builtin_table_json() {
    static const std::string text = R"JSON(
{
  "schema": "pfolia.tables.v1",
  "tables": [
    {
      "p": 2, "lie": "superspecial",
      "rows": [
        {
          "id": "2i.1",
          "nonzero": [["D01", "D12", "D02"], ["a0", "b0"], ["a2", "b2"]],
          "zero": ["c0", "c1", "c2", "c3", "c4"],
          "eqs": []
        },
        {
          "id": "2i.2",
          "nonzero": [["D02"]],
          "zero": ["a1", "b1", "c1", "c3"],
          "eqs": []
        }
      ]
    },
    {
      "p": 2, "lie": "supersingular-not-ss",
      "rows": [
        {
          "id": "2ii.1",
          "nonzero": [["a0", "b0"], ["a1", "b1"], ["a2", "b2"], ["D01"], ["D12"]],
          "zero": ["a1*(D02^2 + D01*D12)"],
          "eqs": [
            {"lhs": "c0", "rhs": "a0^3",    "den": {"D01": 1}},
            {"lhs": "c1", "rhs": "a0^2*a1", "den": {"D01": 1}},
            {"lhs": "c2", "rhs": "a0*a1^2*D01 + a0^2*a1*D02", "den": {"D01": 2}},
            {"lhs": "c2", "rhs": "a2*a1^2*D12 + a2^2*a1*D02", "den": {"D12": 2}},
            {"lhs": "c3", "rhs": "a1*a2^2", "den": {"D12": 1}},
            {"lhs": "c4", "rhs": "a2^3",    "den": {"D12": 1}}
          ]
        },
        {
          "id": "2ii.2",
          "nonzero": [["a0", "b0"], ["a1", "b1"], ["a2", "b2"], ["D01", "D12"], ["b1"]],
          "zero": ["a1", "a0*a2"],
          "eqs": [
            {"lhs": "c0", "rhs": "a0^2", "den": {"b1": 1}},
            {"lhs": "c1", "rhs": "0",    "den": {}},
            {"lhs": "c2", "rhs": "0",    "den": {}},
            {"lhs": "c3", "rhs": "0",    "den": {}},
            {"lhs": "c4", "rhs": "a2^2", "den": {"b1": 1}}
          ]
        }
      ]
    },
    {
      "p": 2, "lie": "p-rank-one",
      "rows": [
        {
          "id": "2iii.1",
          "nonzero": [["a0", "b0"], ["a1", "b1"], ["a2", "b2"], ["D01"], ["D12"]],
          "zero": ["b1*a0*D02*D12 + a2*b1*D02*D01 + a1*b1*D01*D12"],
          "eqs": [
            {"lhs": "c0", "rhs": "b0*a0^2", "den": {"D01": 1}},
            {"lhs": "c1", "rhs": "b1*a0^2", "den": {"D01": 1}},
            {"lhs": "c2", "rhs": "b0*a0*a2*D12 + a0*a2*b2*D01 + a1*D01*D12",
             "den": {"D01": 1, "D12": 1}},
            {"lhs": "c3", "rhs": "b1*a2^2", "den": {"D12": 1}},
            {"lhs": "c4", "rhs": "b2*a2^2", "den": {"D12": 1}}
          ]
        },
        {
          "id": "2iii.2",
          "nonzero": [["a0", "b0"], ["a1", "b1"], ["a2", "b2"], ["D01"]],
          "zero": ["D12", "a1*b1", "a2*b1", "a2*b2"],
          "eqs": [
            {"lhs": "c0", "rhs": "b0*a0^2", "den": {"D01": 1}},
            {"lhs": "c1", "rhs": "b1*a0^2", "den": {"D01": 1}},
            {"lhs": "c2", "rhs": "b0*a1^2*D01 + b1*a0^2*D02", "den": {"D01": 2}},
            {"lhs": "c3", "rhs": "0", "den": {}},
            {"lhs": "c4", "rhs": "b0*a2^2", "den": {"D01": 1}}
          ]
        },
        {"id": "2iii.2m", "mirror_of": "2iii.2"}
      ]
    },
    {
      "p": 2, "lie": "ordinary",
      "rows": [
        {
          "id": "2iv.1",
          "nonzero": [["a0", "b0"], ["a1", "b1"], ["a2", "b2"], ["D01"], ["D12"], ["a1"]],
          "zero": ["(a1*b0^2 + b1*a0^2)*D12^2 + (a1*b2^2 + b1*a2^2)*D01^2 + (b1*a1^2 + a1*b1^2)*D01*D12"],
          "eqs": [
            {"lhs": "c0", "rhs": "a0*b0^2 + b0*a0^2", "den": {"D01": 1}},
            {"lhs": "c1", "rhs": "a1*b0^2 + b1*a0^2", "den": {"D01": 1}},
            {"lhs": "c2", "rhs": "(a2*b0^2 + a2*a0*b0)*D12 + (a0*b2^2 + a0*a2*b2)*D01 + a1*D01*D12",
             "den": {"D01": 1, "D12": 1}},
            {"lhs": "c3", "rhs": "a1*b2^2 + b1*a2^2", "den": {"D12": 1}},
            {"lhs": "c4", "rhs": "a2*b2^2 + b2*a2^2", "den": {"D12": 1}}
          ]
        },
        {
          "id": "2iv.2",
          "nonzero": [["a0", "b0"], ["a1", "b1"], ["a2", "b2"], ["D01"], ["D12"], ["b1"]],
          "zero": ["(a1*b0^2 + b1*a0^2)*D12^2 + (a1*b2^2 + b1*a2^2)*D01^2 + (b1*a1^2 + a1*b1^2)*D01*D12"],
          "eqs": [
            {"lhs": "c0", "rhs": "a0*b0^2 + b0*a0^2", "den": {"D01": 1}},
            {"lhs": "c1", "rhs": "a1*b0^2 + b1*a0^2", "den": {"D01": 1}},
            {"lhs": "c2", "rhs": "(b0*a0*b2 + a0^2*b2)*D12 + (b0*b2*a2 + b0*a2^2)*D01 + b1*D01*D12",
             "den": {"D01": 1, "D12": 1}},
            {"lhs": "c3", "rhs": "a1*b2^2 + b1*a2^2", "den": {"D12": 1}},
            {"lhs": "c4", "rhs": "a2*b2^2 + b2*a2^2", "den": {"D12": 1}}
          ]
        },
        {
          "id": "2iv.3",
          "nonzero": [["a0", "b0"], ["a1", "b1"], ["a2", "b2"], ["D01"]],
          "zero": ["D12",
                   "(a1*b0^2 + b1*a0^2)*D12^2 + (a1*b2^2 + b1*a2^2)*D01^2 + (b1*a1^2 + a1*b1^2)*D01*D12"],
          "eqs": [
            {"lhs": "c0", "rhs": "a0*b0^2 + b0*a0^2", "den": {"D01": 1}},
            {"lhs": "c1", "rhs": "a1*b0^2 + b1*a0^2", "den": {"D01": 1}},
            {"lhs": "c2", "rhs": "(a1*b0^2 + b1*a0^2)*D02 + (a0*b1^2 + b0*a1^2)*D01", "den": {"D01": 2}},
            {"lhs": "c3", "rhs": "0", "den": {}},
            {"lhs": "c4", "rhs": "a0*b2^2 + b0*a2^2", "den": {"D01": 1}}
          ]
        },
        {"id": "2iv.3m", "mirror_of": "2iv.3"}
      ]
    },
    {
      "p": 3, "lie": "superspecial",
      "rows": [
        {
          "id": "3i",
          "nonzero": [["D"]],
          "zero": ["c1", "c2"],
          "eqs": []
        }
      ]
    },
    {
      "p": 3, "lie": "supersingular-not-ss",
      "rows": []
    },
    {
      "p": 3, "lie": "p-rank-one",
      "rows": [
        {
          "id": "3iii",
          "nonzero": [["D"]],
          "zero": [],
          "eqs": [
            {"lhs": "c1*c3 - c2^2", "rhs": "-b0*a1^3",            "den": {"D": 1}},
            {"lhs": "c2*c3",        "rhs": "b1*a1^3",             "den": {"D": 1}},
            {"lhs": "c0*c2 - c1^2", "rhs": "b1*a0^3",             "den": {"D": 1}},
            {"lhs": "c0*c1",        "rhs": "-b0*a0^3",            "den": {"D": 1}}
          ]
        }
      ]
    },
    {
      "p": 3, "lie": "ordinary",
      "rows": [
        {
          "id": "3iv",
          "nonzero": [["D"]],
          "zero": [],
          "eqs": [
            {"lhs": "c1*c3 - c2^2", "rhs": "a0*b1^3 - b0*a1^3",   "den": {"D": 1}},
            {"lhs": "c2*c3",        "rhs": "a1^3*b1 - a1*b1^3",   "den": {"D": 1}},
            {"lhs": "c0*c2 - c1^2", "rhs": "a0^3*b1 - b0^3*a1",   "den": {"D": 1}},
            {"lhs": "c0*c1",        "rhs": "a0*b0^3 - b0*a0^3",   "den": {"D": 1}}
          ]
        }
      ]
    }
  ]
}
)JSON";
    return text;
}

} // namespace pfolia
