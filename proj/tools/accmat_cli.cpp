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

// Command line front end. Exit codes: 0 success, 1 domain violation
// (invalid measurement, infeasible request), 2 I/O or parse failure.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "accmat/accmat.hpp"

namespace {

using namespace accmat;

constexpr double kPi = 3.14159265358979323846;

Vec3 parse_vec3(const std::string& text) {
    if (text == "x") return {1.0, 0.0, 0.0};
    if (text == "y") return {0.0, 1.0, 0.0};
    if (text == "z") return {0.0, 0.0, 1.0};
    if (text == "-x") return {-1.0, 0.0, 0.0};
    if (text == "-y") return {0.0, -1.0, 0.0};
    if (text == "-z") return {0.0, 0.0, -1.0};
    Vec3 v;
    char tail = 0;
    if (std::sscanf(text.c_str(), "%lf,%lf,%lf%c", &v.x, &v.y, &v.z, &tail) != 3) {
        throw std::runtime_error("cannot parse vector '" + text + "' (want x,y,z)");
    }
    return v;
}

Direction parse_direction(const std::string& text) { return direction_along(parse_vec3(text)); }

std::vector<Direction> parse_directions(const std::vector<std::string>& texts) {
    std::vector<Direction> out;
    out.reserve(texts.size());
    for (const std::string& t : texts) out.push_back(parse_direction(t));
    return out;
}

/// The equality:reference preset is the four-outcome measurement saturating the pairwise
/// bound at chi_a = 1/10, chi_b = 36/37 for axes at 30 degrees.
Povm preset_povm(const std::string& name) {
    if (name == "projection:x") return projection_povm(parse_direction("x"));
    if (name == "projection:y") return projection_povm(parse_direction("y"));
    if (name == "projection:z") return projection_povm(parse_direction("z"));
    if (name == "tomography:standard") return standard_tomography_povm();
    if (name == "tomography:minimal") return minimal_tomography_povm();
    if (name == "equality:reference") {
        Direction n_a{{0.0, 0.0, 1.0}};
        Direction n_b{{0.5, 0.0, std::sqrt(3.0) / 2.0}};
        return equality_povm(0.1, 36.0 / 37.0, n_a, n_b);
    }
    if (name.rfind("nonideal:", 0) == 0) {
        double r = 0.0;
        double e1 = 0.0;
        double e2 = 0.0;
        if (std::sscanf(name.c_str(), "nonideal:%lf,%lf,%lf", &r, &e1, &e2) != 3) {
            throw std::runtime_error("cannot parse preset '" + name + "'");
        }
        return nonideal_povm(r, e1, e2, parse_direction("z"));
    }
    throw std::runtime_error("unknown preset '" + name + "'");
}

Povm resolve_povm(const std::string& file, const std::string& preset) {
    if (!file.empty() && !preset.empty()) {
        throw std::runtime_error("give either --povm or --preset, not both");
    }
    if (!file.empty()) return povm_from(read_json_file(file));
    if (!preset.empty()) return preset_povm(preset);
    throw std::runtime_error("a measurement is required (--povm FILE or --preset NAME)");
}

CloningMachine resolve_machine(const std::string& spec, const std::string& file) {
    if (!spec.empty() && !file.empty()) {
        throw std::runtime_error("give either --machine or --machine-file, not both");
    }
    if (!file.empty()) return machine_from(read_json_file(file));
    if (spec == "identity" || spec.empty()) return identity_machine();
    if (spec == "swap") return swap_machine();
    if (spec.rfind("partial:", 0) == 0) {
        double lambda = 0.0;
        if (std::sscanf(spec.c_str(), "partial:%lf", &lambda) != 1) {
            throw std::runtime_error("cannot parse machine '" + spec + "'");
        }
        return partial_swap(lambda);
    }
    throw std::runtime_error("unknown machine '" + spec + "'");
}

double validation_tolerance(std::optional<double> flag) {
    double tol = tolerance::weight_sum;
    if (const char* env = std::getenv("ACCURACY_MATRIX_TOL")) {
        char* end = nullptr;
        double parsed = std::strtod(env, &end);
        if (end == env || *end != '\0') {
            throw std::runtime_error("ACCURACY_MATRIX_TOL is not a number");
        }
        tol = parsed;
    }
    if (flag) tol = *flag;  // the flag wins over the environment
    if (!(tol > 0.0) || tol > 0.1) {
        throw std::runtime_error("validation tolerance must lie in (0, 0.1]");
    }
    return tol;
}

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        write_json_file(out_path, j);
    }
}

void emit_csv(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open " + out_path + " for writing");
    out << text;
}

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

int run(int argc, char** argv) {
    CLI::App app{"accuracy-matrix toolkit for generalized qubit measurements"};
    app.require_subcommand(1);

    std::string povm_file;
    std::string preset;
    std::vector<std::string> dir_texts;
    std::string out_path;

    auto add_povm_opts = [&](CLI::App* cmd) {
        cmd->add_option("--povm", povm_file, "measurement JSON file");
        cmd->add_option("--preset", preset,
                        "projection:x|y|z, tomography:standard|minimal, "
                        "nonideal:R,E1,E2, equality:reference");
    };
    auto add_dir_opt = [&](CLI::App* cmd) {
        cmd->add_option("--direction", dir_texts, "direction as x,y,z or a named axis (repeatable)");
    };
    auto add_out_opt = [&](CLI::App* cmd) { cmd->add_option("--out", out_path, "output file"); };

    // validate
    auto* validate = app.add_subcommand("validate", "check POVM validity");
    add_povm_opts(validate);
    add_out_opt(validate);
    std::optional<double> tol_flag;
    validate->add_option("--tol", tol_flag,
                         "weight/balance tolerance, overrides ACCURACY_MATRIX_TOL");

    // accuracy
    auto* accuracy = app.add_subcommand("accuracy", "accuracy matrix and per-direction parameters");
    add_povm_opts(accuracy);
    add_dir_opt(accuracy);
    add_out_opt(accuracy);

    // tradeoff
    auto* tradeoff = app.add_subcommand("tradeoff",
                                        "pairwise (2 directions) or triple (3) accuracy bound");
    add_povm_opts(tradeoff);
    add_dir_opt(tradeoff);
    add_out_opt(tradeoff);

    // backaction
    auto* backaction = app.add_subcommand("backaction",
                                          "error versus back-action of a weak measurement");
    double kappa = 0.5;
    backaction->add_option("--kappa", kappa, "measurement strength in [0, 1]");
    add_dir_opt(backaction);
    add_out_opt(backaction);

    // equality
    auto* equality = app.add_subcommand("equality", "POVM saturating the pairwise bound");
    double chi_a = 0.5;
    double chi_b = 0.5;
    equality->add_option("--chi-a", chi_a, "target accuracy along the first direction");
    equality->add_option("--chi-b", chi_b, "target accuracy along the second direction");
    add_dir_opt(equality);
    add_out_opt(equality);

    // region
    auto* region = app.add_subcommand("region", "accessible accuracy pairs as CSV");
    double theta = kPi / 2.0;
    int grid = 101;
    region->add_option("--theta", theta, "angle between the directions in radians");
    region->add_option("--grid", grid, "grid points per axis");
    add_out_opt(region);

    // estimate
    auto* estimate = app.add_subcommand("estimate",
                                        "maximum-likelihood estimation from counts or simulation");
    add_povm_opts(estimate);
    add_dir_opt(estimate);
    add_out_opt(estimate);
    std::string counts_file;
    std::string state_text;
    std::int64_t n_max = 1024;
    int trials = 0;
    std::uint64_t seed = 1;
    estimate->add_option("--counts", counts_file, "counts JSON file (single estimate mode)");
    estimate->add_option("--state", state_text, "true Bloch vector x,y,z (simulation mode)");
    estimate->add_option("--n", n_max, "largest sample size (simulation mode)");
    estimate->add_option("--trials", trials, "number of independent trials (simulation mode)");
    estimate->add_option("--seed", seed, "base RNG seed");

    // clone
    auto* clone = app.add_subcommand("clone", "cloning-machine error figures");
    std::string machine_spec;
    std::string machine_file;
    int order = 32;
    clone->add_option("--machine", machine_spec, "identity, swap, or partial:LAMBDA");
    clone->add_option("--machine-file", machine_file, "machine JSON file");
    clone->add_option("--order", order, "sphere quadrature order");
    add_dir_opt(clone);
    add_out_opt(clone);

    // reconstruct
    auto* reconstruct = app.add_subcommand("reconstruct",
                                           "state class from an outcome distribution");
    add_povm_opts(reconstruct);
    add_dir_opt(reconstruct);
    add_out_opt(reconstruct);
    std::string dist_file;
    std::string rec_counts_file;
    bool naive = false;
    reconstruct->add_option("--dist", dist_file, "distribution JSON file {\"q\": [...]}");
    reconstruct->add_option("--counts", rec_counts_file, "counts JSON file");
    reconstruct->add_flag("--naive", naive,
                          "treat count frequencies as exact probabilities (sampling noise "
                          "lands in the residual; no residual rejection)");

    CLI11_PARSE(app, argc, argv);

    if (validate->parsed()) {
        double tol = validation_tolerance(tol_flag);
        Povm p = resolve_povm(povm_file, preset);
        ValidationReport rep = validate_povm(p, tol, tol);
        emit(to_json(rep), out_path);
        return rep.ok() ? 0 : 1;
    }

    if (accuracy->parsed()) {
        Povm p = resolve_povm(povm_file, preset);
        ValidationReport rep = validate_povm(p);
        if (!rep.ok()) {
            std::cerr << "invalid measurement:\n" << to_json(rep).dump(2) << "\n";
            return 1;
        }
        AccuracyMatrix a = accuracy_matrix(p);
        json j = to_json(a);
        j["optimal"] = is_optimal(a);
        j["symmetric"] = is_symmetric(a);
        j["max_accuracy"] = max_accuracy(a);
        json dirs = json::array();
        for (const Direction& n : parse_directions(dir_texts)) {
            json d = to_json(accuracy_parameter(a, n));
            d["direction"] = to_json(n.n);
            dirs.push_back(d);
        }
        j["directions"] = dirs;
        emit(j, out_path);
        return 0;
    }

    if (tradeoff->parsed()) {
        Povm p = resolve_povm(povm_file, preset);
        std::vector<Direction> dirs = parse_directions(dir_texts);
        if (dirs.size() == 2) {
            emit(to_json(pairwise_tradeoff(p, dirs[0], dirs[1])), out_path);
            return 0;
        }
        if (dirs.size() == 3) {
            emit(to_json(triple_tradeoff(p, dirs[0], dirs[1], dirs[2])), out_path);
            return 0;
        }
        throw std::runtime_error("tradeoff needs exactly 2 or 3 --direction options");
    }

    if (backaction->parsed()) {
        std::vector<Direction> dirs = parse_directions(dir_texts);
        if (dirs.size() != 2) {
            throw std::runtime_error("backaction needs exactly 2 --direction options");
        }
        emit(to_json(error_backaction(weak_measurement(kappa), dirs[0], dirs[1])), out_path);
        return 0;
    }

    if (equality->parsed()) {
        std::vector<Direction> dirs = parse_directions(dir_texts);
        if (dirs.size() != 2) {
            throw std::runtime_error("equality needs exactly 2 --direction options");
        }
        emit(to_json(equality_povm(chi_a, chi_b, dirs[0], dirs[1])), out_path);
        return 0;
    }

    if (region->parsed()) {
        std::string csv = "chi_a,chi_b,feasible,band\n";
        for (const RegionPoint& pt : accessible_region(theta, grid)) {
            csv += fmt(pt.chi_a) + "," + fmt(pt.chi_b) + "," + (pt.feasible ? "1" : "0") + "," +
                   pt.band + "\n";
        }
        emit_csv(csv, out_path);
        return 0;
    }

    if (estimate->parsed()) {
        Povm p = resolve_povm(povm_file, preset);
        if (!counts_file.empty()) {
            Counts c = counts_from(read_json_file(counts_file));
            MleResult mle = mle_bloch(p, c);
            json j = to_json(mle);
            json dirs = json::array();
            for (const Direction& n : parse_directions(dir_texts)) {
                dirs.push_back(json{{"direction", to_json(n.n)},
                                    {"p_plus", estimate_direction_probability(mle.s_star, n)}});
            }
            j["directions"] = dirs;
            emit(j, out_path);
            return 0;
        }
        if (state_text.empty() || trials <= 0) {
            throw std::runtime_error(
                "estimate needs --counts FILE, or --state with --trials for simulation");
        }
        BlochVector s = bloch_vector(parse_vec3(state_text));
        std::vector<Direction> dirs = parse_directions(dir_texts);
        if (dirs.empty()) throw std::runtime_error("simulation needs at least one --direction");
        std::string csv = "trial,n_samples,direction_index,p_plus_estimate,crb_std\n";
        for (const TrajectoryRow& row : simulate_trajectories(p, s, dirs, n_max, trials, seed)) {
            csv += std::to_string(row.trial) + "," + std::to_string(row.n_samples) + "," +
                   std::to_string(row.direction_index) + "," + fmt(row.p_plus) + "," +
                   fmt(row.crb) + "\n";
        }
        emit_csv(csv, out_path);
        return 0;
    }

    if (clone->parsed()) {
        CloningMachine m = resolve_machine(machine_spec, machine_file);
        CloningReport rep = verify_no_cloning(m, order);
        json j = to_json(rep);
        json dirs = json::array();
        for (const Direction& n : parse_directions(dir_texts)) {
            DirectionErrors de = direction_errors(m, n);
            dirs.push_back(json{{"direction", to_json(n.n)},
                                {"chi_p", de.chi_p},
                                {"eps_p", extended_real(de.eps_p)},
                                {"chi_q", de.chi_q},
                                {"eps_q", extended_real(de.eps_q)}});
        }
        j["directions"] = dirs;
        emit(j, out_path);
        return 0;
    }

    if (reconstruct->parsed()) {
        Povm p = resolve_povm(povm_file, preset);
        OutcomeDistribution q;
        json j;
        if (!dist_file.empty()) {
            q.q = read_json_file(dist_file).at("q").get<std::vector<double>>();
            j["mode"] = "exact";
        } else if (!rec_counts_file.empty()) {
            Counts c = counts_from(read_json_file(rec_counts_file));
            if (!naive) {
                throw std::runtime_error(
                    "counts are sampled data; pass --naive to reconstruct from frequencies, "
                    "or use 'estimate --counts' for maximum likelihood");
            }
            if (c.total <= 0) throw std::runtime_error("counts are empty");
            for (std::int64_t k : c.counts) {
                q.q.push_back(static_cast<double>(k) / static_cast<double>(c.total));
            }
            j["mode"] = "naive-frequencies";
        } else {
            throw std::runtime_error("reconstruct needs --dist FILE or --counts FILE with --naive");
        }

        if (naive) {
            // Frequencies are noisy, so the residual is reported, not enforced.
            auto [s, residual] = least_squares_state(p, q);
            j["s"] = to_json(s);
            j["s_norm"] = norm(s);
            j["residual"] = residual;
            if (norm(s) > 1.0) j["outside_ball"] = true;
            json dirs = json::array();
            for (const Direction& n : parse_directions(dir_texts)) {
                double c = dot(n.n, s);
                dirs.push_back(json{{"direction", to_json(n.n)},
                                    {"p_plus", std::min(1.0, std::max(0.0, 0.5 * (1.0 + c)))}});
            }
            j["directions"] = dirs;
            emit(j, out_path);
            return 0;
        }

        BlochVector s = reconstruct_state_class(p, q);
        j["s"] = to_json(s.s);
        j["tomographically_complete"] = is_tomographically_complete(p);
        json dirs = json::array();
        for (const Direction& n : parse_directions(dir_texts)) {
            json d{{"direction", to_json(n.n)}, {"reconstructive", is_reconstructive(p, n)}};
            if (is_reconstructive(p, n)) {
                auto [plus, minus] = reconstruct_direction_probability(p, q, n);
                d["p_plus"] = plus;
                d["p_minus"] = minus;
            }
            dirs.push_back(d);
        }
        j["directions"] = dirs;
        emit(j, out_path);
        return 0;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
