// Copyright 2026 The qe7 Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qe7/e7.h"
#include "qe7/f2sym.h"
#include "qe7/heisenberg.h"
#include "qe7/verify.h"

using nlohmann::json;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OutputFlags {
    bool json = false;
    bool text = false;
};

void add_output_flags(CLI::App *cmd, OutputFlags &flags) {
    auto *j = cmd->add_flag("--json", flags.json, "JSON output (default)");
    auto *t = cmd->add_flag("--text", flags.text, "aligned text output");
    j->excludes(t);
}

// Column-aligned table; the first row is the header.
std::string table(const std::vector<std::vector<std::string>> &rows) {
    std::vector<std::size_t> widths;
    for (const auto &row : rows) {
        widths.resize(std::max(widths.size(), row.size()));
        for (std::size_t c = 0; c < row.size(); c++) {
            widths[c] = std::max(widths[c], row[c].size());
        }
    }
    std::ostringstream out;
    for (const auto &row : rows) {
        for (std::size_t c = 0; c < row.size(); c++) {
            out << row[c];
            if (c + 1 < row.size()) {
                out << std::string(widths[c] - row[c].size() + 2, ' ');
            }
        }
        out << "\n";
    }
    return out.str();
}

std::string coords_str(const qe7::SimpleRootCoords &c) {
    std::string out;
    for (int x : c) {
        out += (out.empty() ? "" : ",") + std::to_string(x);
    }
    return out;
}

int check_k(int k, int lo, int hi) {
    if (k < lo || k > hi) {
        throw UsageError("--k must be in " + std::to_string(lo) + ".." + std::to_string(hi));
    }
    return k;
}

int cmd_verify(const std::string &suite, bool as_json) {
    const auto &names = qe7::suite_names();
    if (std::find(names.begin(), names.end(), suite) == names.end()) {
        throw UsageError("unknown suite '" + suite + "'");
    }
    qe7::VerificationReport report = qe7::run_verify(suite);
    std::cout << (as_json ? report.json() + "\n" : report.text());
    return report.passed() ? 0 : kExitFail;
}

json roots_json() {
    json out = json::array();
    for (const auto &r : qe7::enumerate_roots()) {
        out.push_back({{"name", r.str()},
                       {"vector", r.vector().n},
                       {"simple_coords", qe7::root_in_simple_coords(r)},
                       {"pi", qe7::pi_of_root(r).str()}});
    }
    return out;
}

json weights_json() {
    json out = json::array();
    for (const auto &w : qe7::enumerate_weight_classes()) {
        json entry = {{"name", w.str()}, {"vector", w.vector().n}};
        entry["odd_form"] = qe7::odd_form_of_weight(w).str();
        out.push_back(entry);
    }
    return out;
}

json lagrangians_json(int k) {
    json out = json::array();
    for (const auto &l : qe7::enumerate_lagrangians(k)) {
        json points = json::array();
        for (const auto &p : l.points()) {
            points.push_back(p.str());
        }
        out.push_back({{"basis", l.str()}, {"points", points}});
    }
    return out;
}

json quadforms_json(int k) {
    json out = json::array();
    for (auto parity : {qe7::Parity::Even, qe7::Parity::Odd}) {
        for (const auto &q : qe7::enumerate_quad_forms(k, parity)) {
            out.push_back({{"label", q.label.str()},
                           {"parity", parity == qe7::Parity::Even ? "even" : "odd"},
                           {"zeros", q.zeros}});
        }
    }
    return out;
}

std::string items_text(const std::string &what, const json &items) {
    std::vector<std::vector<std::string>> rows;
    if (what == "roots") {
        rows.push_back({"name", "simple_coords", "pi"});
        for (const auto &r : items) {
            std::string c;
            for (int x : r["simple_coords"]) {
                c += (c.empty() ? "" : ",") + std::to_string(x);
            }
            rows.push_back({r["name"], c, r["pi"]});
        }
    } else if (what == "weights") {
        rows.push_back({"name", "odd_form"});
        for (const auto &w : items) {
            rows.push_back({w["name"], w["odd_form"]});
        }
    } else if (what == "lagrangians") {
        rows.push_back({"basis", "points"});
        for (const auto &l : items) {
            std::string pts;
            for (const auto &p : l["points"]) {
                pts += (pts.empty() ? "" : " ") + p.get<std::string>();
            }
            rows.push_back({l["basis"], pts});
        }
    } else {
        rows.push_back({"label", "parity", "zeros"});
        for (const auto &q : items) {
            rows.push_back({q["label"], q["parity"], std::to_string(q["zeros"].get<int>())});
        }
    }
    return table(rows);
}

int cmd_enumerate(const std::string &what, int k, const OutputFlags &out, bool count_only) {
    json items;
    if (what == "roots") {
        items = roots_json();
    } else if (what == "weights") {
        items = weights_json();
    } else if (what == "lagrangians") {
        items = lagrangians_json(check_k(k, 1, 3));
    } else {
        items = quadforms_json(check_k(k, 1, 4));
    }
    if (count_only) {
        if (out.text) {
            std::cout << items.size() << "\n";
        } else {
            std::cout << json{{"kind", what}, {"count", items.size()}}.dump(2) << "\n";
        }
        return 0;
    }
    if (out.text) {
        std::cout << items_text(what, items);
    } else {
        json doc = {{"kind", what}, {"count", items.size()}, {"items", items}};
        if (what == "lagrangians" || what == "quadforms") {
            doc["k"] = k;
        }
        std::cout << doc.dump(2) << "\n";
    }
    return 0;
}

int cmd_decompose(const std::string &basis, const OutputFlags &out) {
    qe7::IsotropicSubspace lag = qe7::IsotropicSubspace::parse(basis);
    qe7::FanoDecomposition d = qe7::restriction_decomposition(lag);
    if (!out.text) {
        std::cout << json::parse(qe7::to_json(d)).dump(2) << "\n";
        return 0;
    }
    std::vector<std::vector<std::string>> points = {{"letter", "point", "root"}};
    for (const auto &p : d.points) {
        points.push_back({p.letter.empty() ? "-" : p.letter, p.v.str(), p.root.str()});
    }
    std::vector<std::vector<std::string>> lines = {{"line", "a", "roots", "weights"}};
    for (const auto &l : d.lines) {
        std::string roots;
        for (const auto &r : l.roots) {
            roots += (roots.empty() ? "" : ",") + r.str();
        }
        std::string weights;
        for (const auto &w : l.weights) {
            weights += (weights.empty() ? "" : ",") + w.str();
        }
        lines.push_back({l.name.empty() ? "-" : l.name, l.a ? std::to_string(*l.a) : "-", roots, weights});
    }
    std::cout << "lagrangian " << d.lagrangian.str() << "\n\n" << table(points) << "\n" << table(lines);
    return 0;
}

int cmd_lift(const std::string &v_text, int k, const OutputFlags &out) {
    qe7::SympVector v = qe7::SympVector::parse(v_text);
    if (k != 0 && k != v.k()) {
        throw UsageError("--k " + std::to_string(k) + " does not match vector " + v_text);
    }
    qe7::PhasedOperator m = qe7::lift_transvection(v);
    if (out.text) {
        std::cout << m.pretty();
    } else {
        std::cout << m.to_json() << "\n";
    }
    return 0;
}

int cmd_pi(const std::string &name, const OutputFlags &out) {
    qe7::RootLabel r = qe7::RootLabel::parse(name);
    qe7::SympVector p = qe7::pi_of_root(r);
    qe7::SimpleRootCoords c = qe7::root_in_simple_coords(r);
    if (out.text) {
        std::cout << table({{"root", "simple_coords", "pi"}, {r.str(), coords_str(c), p.str()}});
    } else {
        std::cout << json{{"root", r.str()}, {"simple_coords", c}, {"pi", p.str()}}.dump(2) << "\n";
    }
    return 0;
}

int cmd_orders(int k, const OutputFlags &out) {
    check_k(k, 1, 3);
    std::vector<qe7::SympMatrix> images;
    for (const auto &v : qe7::diagram_labels(k)) {
        images.push_back(qe7::normalizer_image(qe7::lift_transvection(v)).phi);
    }
    json doc = {{"k", k}};
    doc["sp_order"] = qe7::generate_group(images).order();
    doc["sp_order_formula"] = qe7::symplectic_group_order_formula(k);
    doc["lagrangians"] = qe7::enumerate_lagrangians(k).size();
    json orth = json::array();
    for (auto parity : {qe7::Parity::Even, qe7::Parity::Odd}) {
        // q_0, and an odd form (the highest-root label at k=3).
        qe7::QuadLabel q = parity == qe7::Parity::Even
                               ? qe7::QuadLabel(qe7::SympVector::zero(k))
                               : qe7::enumerate_quad_forms(k, parity).back().label;
        if (k == 3 && parity == qe7::Parity::Odd) {
            q = qe7::QuadLabel(qe7::SympVector::parse("100:111"));
        }
        orth.push_back({{"label", q.str()}, {"transvection_closure_order", qe7::orthogonal_group_order(q)}});
    }
    doc["orthogonal"] = orth;
    if (k == 3) {
        qe7::WeylSummary w = qe7::weyl_group_summary();
        doc["weyl"] = {{"order", w.order},
                       {"contains_minus_identity", w.contains_minus_identity},
                       {"kernel_size", w.kernel_size},
                       {"image_order", w.image_order}};
    }
    if (!out.text) {
        std::cout << doc.dump(2) << "\n";
        return 0;
    }
    std::vector<std::vector<std::string>> rows = {{"group", "order"}};
    rows.push_back({"Sp(" + std::to_string(2 * k) + ",F2)", std::to_string(doc["sp_order"].get<uint64_t>())});
    for (const auto &o : orth) {
        rows.push_back({"<t_v : q(v)=1> " + o["label"].get<std::string>(), std::to_string(o["transvection_closure_order"].get<uint64_t>())});
    }
    rows.push_back({"Lagrangians", std::to_string(doc["lagrangians"].get<uint64_t>())});
    if (k == 3) {
        rows.push_back({"W(E7)", std::to_string(doc["weyl"]["order"].get<uint64_t>())});
    }
    std::cout << table(rows);
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Exact Heisenberg, Sp(2k,F2) and E7 computations"};
    app.require_subcommand(1);

    std::string suite;
    bool verify_json = false;
    auto *verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite, "suite name, or 'all'")->required();
    verify->add_flag("--json", verify_json, "JSON report");

    std::string what;
    int k = 3;
    bool count_only = false;
    OutputFlags enum_out;
    auto *enumerate = app.add_subcommand("enumerate", "list roots, weights, Lagrangians or quadratic forms");
    enumerate->add_option("what", what, "roots|weights|lagrangians|quadforms")
        ->required()
        ->check(CLI::IsMember({"roots", "weights", "lagrangians", "quadforms"}));
    enumerate->add_option("--k", k, "rank for lagrangians/quadforms");
    enumerate->add_flag("--count-only", count_only, "print only the count");
    add_output_flags(enumerate, enum_out);

    std::string basis = "100:000,010:000,001:000";
    OutputFlags dec_out;
    auto *decompose = app.add_subcommand("decompose", "Fano decomposition of V(omega7) over a Lagrangian");
    decompose->add_option("--lagrangian", basis, "comma-separated basis abc:def,abc:def,abc:def");
    add_output_flags(decompose, dec_out);

    std::string v_text;
    int lift_k = 0;
    OutputFlags lift_out;
    auto *lift = app.add_subcommand("lift", "normalizer lift M_v of the transvection t_v");
    lift->add_option("--v", v_text, "vector abc:def")->required();
    lift->add_option("--k", lift_k, "rank (checked against --v)");
    add_output_flags(lift, lift_out);

    std::string root_name;
    OutputFlags pi_out;
    auto *pi = app.add_subcommand("pi", "image of a root in V_3");
    pi->add_option("--root", root_name, "root name such as R12, R1238, -R18")->required();
    add_output_flags(pi, pi_out);

    int orders_k = 3;
    OutputFlags orders_out;
    auto *orders = app.add_subcommand("orders", "group orders");
    orders->add_option("--k", orders_k, "rank 1..3");
    add_output_flags(orders, orders_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*verify) {
            return cmd_verify(suite, verify_json);
        }
        if (*enumerate) {
            return cmd_enumerate(what, k, enum_out, count_only);
        }
        if (*decompose) {
            return cmd_decompose(basis, dec_out);
        }
        if (*lift) {
            return cmd_lift(v_text, lift_k, lift_out);
        }
        if (*pi) {
            return cmd_pi(root_name, pi_out);
        }
        return cmd_orders(orders_k, orders_out);
    } catch (const UsageError &e) {
        std::cerr << "qe7: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument &e) {
        std::cerr << "qe7: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "qe7: internal error: " << e.what() << "\n";
        return kExitFail;
    }
}
