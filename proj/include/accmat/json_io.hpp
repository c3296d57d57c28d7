// Copyright 2026 The accmat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ACCMAT_JSON_IO_HPP
#define ACCMAT_JSON_IO_HPP

#include <fstream>

#include <json.hpp>

#include "accmat/accuracy.hpp"
#include "accmat/cloning.hpp"
#include "accmat/estimation.hpp"
#include "accmat/joint.hpp"
#include "accmat/povm.hpp"
#include "accmat/tradeoff.hpp"

namespace accmat {

using nlohmann::json;

/// Values that may be infinite travel as {"finite": bool, "value": num|null}
/// since JSON has no inf literal. NaN (indeterminate) also maps to null.
inline json extended_real(double x) {
    if (std::isfinite(x)) return json{{"finite", true}, {"value", x}};
    return json{{"finite", false}, {"value", nullptr}};
}

inline double extended_real_from(const json& j) {
    if (!j.at("finite").get<bool>()) return std::numeric_limits<double>::infinity();
    return j.at("value").get<double>();
}

inline json to_json(const Vec3& v) { return json::array({v.x, v.y, v.z}); }

inline Vec3 vec3_from(const json& j) {
    if (!j.is_array() || j.size() != 3) {
        throw std::invalid_argument("expected a 3-vector");
    }
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

inline json to_json(const PovmElement& e) {
    return json{{"r", e.r}, {"v", to_json(e.v)}};
}

inline PovmElement element_from(const json& j) {
    return {j.at("r").get<double>(), vec3_from(j.at("v"))};
}

inline json to_json(const Povm& p) {
    json elems = json::array();
    for (const PovmElement& e : p.elements) elems.push_back(to_json(e));
    return json{{"elements", elems}};
}

inline Povm povm_from(const json& j) {
    Povm p;
    for (const json& e : j.at("elements")) p.elements.push_back(element_from(e));
    return p;
}

inline json to_json(const Counts& c) {
    return json{{"counts", c.counts}, {"total", c.total}};
}

inline Counts counts_from(const json& j) {
    Counts c;
    c.counts = j.at("counts").get<std::vector<std::int64_t>>();
    c.total = j.at("total").get<std::int64_t>();
    std::int64_t sum = 0;
    for (std::int64_t k : c.counts) {
        if (k < 0) throw std::invalid_argument("counts must be nonnegative");
        sum += k;
    }
    if (sum != c.total) throw std::invalid_argument("counts do not sum to total");
    return c;
}

inline json to_json(const AccuracyMatrix& a) {
    json rows = json::array();
    for (int i = 0; i < 3; i++) {
        rows.push_back(json::array({a.chi.at(i, 0), a.chi.at(i, 1), a.chi.at(i, 2)}));
    }
    json vecs = json::array();
    for (const Vec3& v : a.eigenvectors) vecs.push_back(to_json(v));
    return json{{"chi", rows},
                {"eigenvalues", a.eigenvalues},
                {"eigenvectors", vecs},
                {"trace", trace(a.chi)},
                {"support_rank", a.support_rank}};
}

/// Joint measurements keep their outcome labels as object keys.
inline json to_json(const JointPovm& jp) {
    static const char* keys[4] = {"++", "+-", "-+", "--"};
    json elems;
    for (int k = 0; k < 4; k++) {
        elems[keys[k]] = to_json(jp.elements[static_cast<std::size_t>(k)]);
    }
    return json{{"elements", elems}};
}

inline JointPovm joint_from(const json& j) {
    static const char* keys[4] = {"++", "+-", "-+", "--"};
    JointPovm jp;
    for (int k = 0; k < 4; k++) {
        jp.elements[static_cast<std::size_t>(k)] = element_from(j.at("elements").at(keys[k]));
    }
    return jp;
}

inline json matrix4_to_json(const Mat4c& u, bool imag) {
    json rows = json::array();
    for (int i = 0; i < 4; i++) {
        json row = json::array();
        for (int j = 0; j < 4; j++) {
            row.push_back(imag ? std::imag(u.at(i, j)) : std::real(u.at(i, j)));
        }
        rows.push_back(row);
    }
    return rows;
}

inline Mat4c matrix4_from(const json& re, const json& im) {
    Mat4c u;
    for (int i = 0; i < 4; i++) {
        for (int j = 0; j < 4; j++) {
            u.at(i, j) = Complex(re.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(j)).get<double>(),
                                 im.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(j)).get<double>());
        }
    }
    return u;
}

/// Single-branch machines serialize flat; probabilistic mixtures add a
/// branches array. Both forms are accepted on input.
inline json to_json(const CloningMachine& m) {
    if (m.branches.size() == 1) {
        return json{{"unitary_re", matrix4_to_json(m.branches[0].unitary, false)},
                    {"unitary_im", matrix4_to_json(m.branches[0].unitary, true)},
                    {"blank", to_json(m.blank)}};
    }
    json branches = json::array();
    for (const CloningBranch& b : m.branches) {
        branches.push_back(json{{"probability", b.probability},
                                {"unitary_re", matrix4_to_json(b.unitary, false)},
                                {"unitary_im", matrix4_to_json(b.unitary, true)}});
    }
    return json{{"branches", branches}, {"blank", to_json(m.blank)}};
}

inline CloningMachine machine_from(const json& j) {
    CloningMachine m;
    m.blank = vec3_from(j.at("blank"));
    if (j.contains("branches")) {
        for (const json& b : j.at("branches")) {
            m.branches.push_back({b.at("probability").get<double>(),
                                  matrix4_from(b.at("unitary_re"), b.at("unitary_im"))});
        }
    } else {
        m.branches.push_back({1.0, matrix4_from(j.at("unitary_re"), j.at("unitary_im"))});
    }
    validate_machine(m);
    return m;
}

inline json to_json(const ValidationReport& r) {
    json v = json::array();
    for (const Violation& x : r.violations) {
        v.push_back(json{{"what", x.what}, {"residual", x.residual}});
    }
    return json{{"ok", r.ok()}, {"violations", v}};
}

inline json to_json(const AccuracyReport& r) {
    return json{{"chi", r.chi_n}, {"eps", extended_real(r.eps_n)}, {"in_support", r.in_support}};
}

inline json to_json(const TradeoffReport& t) {
    return json{{"chi_a", t.chi_a},         {"chi_b", t.chi_b},
                {"eps_a", extended_real(t.eps_a)}, {"eps_b", extended_real(t.eps_b)},
                {"cos_theta", t.cos_theta}, {"lhs", extended_real(t.lhs)},
                {"rhs", t.rhs},             {"chi_form", t.chi_form},
                {"satisfied", t.satisfied}, {"equality", t.equality}};
}

inline json to_json(const TripleTradeoffReport& t) {
    return json{{"chi", t.chi},
                {"eps", json::array({extended_real(t.eps[0]), extended_real(t.eps[1]),
                                     extended_real(t.eps[2])})},
                {"triple_product", t.triple_product},
                {"lhs", extended_real(t.lhs)},
                {"rhs", t.rhs},
                {"chi_form_lhs", t.chi_form_lhs},
                {"chi_form_rhs", t.chi_form_rhs},
                {"satisfied", t.satisfied},
                {"equality", t.equality}};
}

inline json to_json(const BackactionReport& b) {
    return json{{"chi_a", b.chi_a},         {"eps_a", extended_real(b.eps_a)},
                {"chi_b", b.chi_b},         {"d_b", extended_real(b.d_b)},
                {"cos_theta", b.cos_theta}, {"lhs", extended_real(b.lhs)},
                {"rhs", b.rhs},             {"chi_form", b.chi_form},
                {"satisfied", b.satisfied}, {"equality", b.equality}};
}

inline json to_json(const CloningReport& r) {
    const char* verdict = r.verdict == CloningVerdict::Satisfied
                              ? "satisfied"
                              : (r.verdict == CloningVerdict::Violated ? "violated" : "degenerate");
    return json{{"c_p", extended_real(r.c_p)},
                {"c_q", extended_real(r.c_q)},
                {"product", r.product_indeterminate ? json(nullptr) : extended_real(r.product)},
                {"product_indeterminate", r.product_indeterminate},
                {"verdict", verdict},
                {"order", r.order}};
}

inline json to_json(const MleResult& r) {
    return json{{"s", to_json(r.s_star.s)},
                {"loglik", r.loglik},
                {"iterations", r.iterations},
                {"converged", r.converged},
                {"support_rank", r.support_rank}};
}

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    in >> j;
    return j;
}

inline void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << j.dump(2) << "\n";
}

}  // namespace accmat

#endif
