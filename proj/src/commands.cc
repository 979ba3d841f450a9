// Copyright 2026 The PQC Toolkit Authors
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

#include <cmath>
#include <sstream>

#include "pqc/compiler.h"
#include "pqc/errors.h"
#include "pqc/lindblad.h"
#include "pqc/measurement.h"
#include "pqc/reference.h"
#include "pqc/rng.h"
#include "pqc/runner.h"
#include "pqc/search.h"

namespace pqc {

using nlohmann::json;

std::string Report::render(OutputFormat format) const {
    if (format == OutputFormat::kCsv) {
        return csv;
    }
    return json.dump(2) + "\n";
}

nlohmann::json matrix_to_json(const ComplexMatrix &m) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            row.push_back({m(r, c).real(), m(r, c).imag()});
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

nlohmann::json channel_to_json(const KrausPairChannel &ch) {
    json pairs = json::array();
    for (const KrausPair &p : ch.pairs()) {
        pairs.push_back({{"K", matrix_to_json(p.k)}, {"L", matrix_to_json(p.l)}});
    }
    json out{{"n", ch.n()}, {"pairs", std::move(pairs)}};
    out["eta"] = ch.eta() ? json(*ch.eta()) : json(nullptr);
    return out;
}

namespace {

std::string variant_name(F0Variant v) { return v == F0Variant::kProjector ? "projector" : "identity"; }

std::string csv_number(double v) {
    std::ostringstream out;
    out.precision(17);
    out << v;
    return out.str();
}

}  // namespace

std::vector<GateCase> default_gate_table() {
    std::vector<GateCase> table;
    for (Gate g : {Gate::kX, Gate::kY, Gate::kZ, Gate::kH, Gate::kHSH, Gate::kHTH, Gate::kHHCnotHH}) {
        const KrausPairChannel ch = gate_channel({g, F0Variant::kProjector});
        table.push_back({gate_name(g), F0Variant::kProjector, ch, gate_target(g), ch.eta().value_or(1.0)});
    }
    for (Gate g : {Gate::kX, Gate::kY, Gate::kZ}) {
        const KrausPairChannel ch = gate_channel({g, F0Variant::kIdentity});
        table.push_back({gate_name(g), F0Variant::kIdentity, ch, gate_target(g), ch.eta().value_or(1.0)});
    }
    return table;
}

Report cmd_verify_gates(double tolerance, const std::vector<GateCase> &table) {
    Report report;
    json rows = json::array();
    report.csv = "gate,variant,eta,residual,pass\n";
    bool all_pass = true;
    for (const GateCase &c : table) {
        const double residual = verify_po(c.channel, c.target, c.variant, c.eta);
        const bool pass = residual < tolerance;
        all_pass = all_pass && pass;
        rows.push_back({{"gate", c.name},
                        {"variant", variant_name(c.variant)},
                        {"eta", c.eta},
                        {"residual", residual},
                        {"pass", pass}});
        report.csv += c.name + "," + variant_name(c.variant) + "," + csv_number(c.eta) + "," + csv_number(residual) +
                      "," + (pass ? "true" : "false") + "\n";
    }
    report.json = {{"schema", 1},
                   {"command", "verify-gates"},
                   {"tolerance", tolerance},
                   {"rows", std::move(rows)},
                   {"pass", all_pass}};
    report.exit_code = all_pass ? kExitPass : kExitFail;
    return report;
}

Report cmd_amplitude(const Circuit &u, const BitString &alpha, double tolerance) {
    const int n = u.n();
    if (alpha.size() != n) {
        throw DimensionError("alpha has " + std::to_string(alpha.size()) + " bits, circuit has " +
                             std::to_string(n) + " qubits");
    }
    const NdmeState input = encode_state_optimal(AmplitudeVector::plus_state(n));
    const CompiledProgram program = compile(u);
    const NdmeState output = run_program(program, input);
    const cplx c_pqc = amplitude_via_pauli(output, alpha);

    // <alpha| H^n U H^n |+>^n = <alpha| H^n U |0>^n.
    const ComplexVector oracle_state =
        hadamard_transform(simulate(u, StateVector::zero(n)).amplitudes());
    const cplx c_oracle = oracle_state(static_cast<Eigen::Index>(alpha.index()));

    const int k = program.hadamard_count;
    const double raw_x = pauli_expectation(output.rho(), assisted_x_string('X', alpha));
    const double raw_y = pauli_expectation(output.rho(), assisted_x_string('Y', alpha));
    const double amplification = predicted_signal_factor(n, k, input.gamma());
    const double amplitude_error = std::abs(c_pqc - c_oracle);
    const double signal_error =
        std::max(std::abs(raw_x - amplification * c_oracle.real()), std::abs(raw_y + amplification * c_oracle.imag()));
    const double eta_error = std::abs(program.eta_total - std::pow(2.0, -0.5 * k));
    const bool pass = amplitude_error < tolerance && signal_error < tolerance && eta_error < kExactTol;

    Report report;
    report.json = {{"schema", 1},
                   {"command", "amplitude"},
                   {"n", n},
                   {"gates", u.gates().size()},
                   {"k", k},
                   {"alpha", alpha.str()},
                   {"eta", program.eta_total},
                   {"gamma", output.gamma()},
                   {"c_alpha_pqc_re", c_pqc.real()},
                   {"c_alpha_pqc_im", c_pqc.imag()},
                   {"c_alpha_oracle_re", c_oracle.real()},
                   {"c_alpha_oracle_im", c_oracle.imag()},
                   {"raw_signal", raw_x},
                   {"raw_signal_y", raw_y},
                   {"amplification", amplification},
                   {"amplitude_error", amplitude_error},
                   {"signal_error", signal_error},
                   {"tolerance", tolerance},
                   {"pass", pass}};
    report.csv =
        "n,k,alpha,eta,c_alpha_pqc_re,c_alpha_pqc_im,c_alpha_oracle_re,c_alpha_oracle_im,raw_signal,amplification,pass\n" +
        std::to_string(n) + "," + std::to_string(k) + "," + alpha.str() + "," + csv_number(program.eta_total) + "," +
        csv_number(c_pqc.real()) + "," + csv_number(c_pqc.imag()) + "," + csv_number(c_oracle.real()) + "," +
        csv_number(c_oracle.imag()) + "," + csv_number(raw_x) + "," + csv_number(amplification) + "," +
        (pass ? "true" : "false") + "\n";
    report.exit_code = pass ? kExitPass : kExitFail;
    return report;
}

namespace {

bool matrix_is_real(const ComplexMatrix &m) { return m.imag().cwiseAbs().maxCoeff() < kExactTol; }

double max_ite_residual(const Trajectory &traj, const AmplitudeVector &psi0, const PauliHamiltonian &h, double gamma0) {
    double worst = 0.0;
    for (std::size_t s = 0; s < traj.times.size(); ++s) {
        const ComplexVector u = ite_reference(psi0, h, traj.times[s]);
        worst = std::max(worst, block_ite_residual(traj.states[s].block(), gamma0, u));
    }
    return worst;
}

}  // namespace

Report cmd_lindblad(const PauliHamiltonian &h, const LindbladOptions &options) {
    const int n = h.n();
    if (n > kMaxDenseHermitianQubits) {
        throw SizeError("Lindblad runs are limited to " + std::to_string(kMaxDenseHermitianQubits) + " qubits");
    }
    const AmplitudeVector psi0 = AmplitudeVector::plus_state(n);
    const NdmeState rho0 = encode_state_optimal(psi0);
    const JumpSet jumps = build_jumps(h);
    double jump_check = 0.0;
    if (n <= 3) {
        for (const Jump &j : jumps.jumps) {
            jump_check = std::max(jump_check, jump_residual(j));
        }
    }
    const Trajectory traj = evolve(rho0, jumps, options.t_max, options.dt, options.record_stride);
    const double residual = max_ite_residual(traj, psi0, h, rho0.gamma());
    const GroundSpace ground = ground_projector(h);
    const double rate_expected = ground.energy + h.lambda_sum();
    const bool frustrated = rate_expected > 1e-9;

    json summary{{"schema", 1},
                 {"command", "lindblad"},
                 {"n", n},
                 {"terms", h.terms().size()},
                 {"t_max", options.t_max},
                 {"dt", options.dt},
                 {"ground_energy", ground.energy},
                 {"ground_dimension", ground.dimension},
                 {"lambda_sum", h.lambda_sum()},
                 {"frustrated", frustrated},
                 {"jump_residual", jump_check},
                 {"max_trace_error", traj.max_trace_error},
                 {"block_residual_vs_ite", residual}};
    bool pass = residual < options.residual_tolerance && jump_check < kExactTol;
    std::vector<double> coherence;
    if (frustrated) {
        const double from = options.t_max > 1.0 ? 1.0 : 0.5 * options.t_max;
        const double rate = fit_decay_rate(traj, from, options.t_max);
        const double rel = std::abs(rate - rate_expected) / rate_expected;
        summary["decay_rate_fit"] = rate;
        summary["decay_rate_expected"] = rate_expected;
        summary["decay_rate_relative_error"] = rel;
        summary["steadiness_max_derivative"] = nullptr;
        pass = pass && rel < options.decay_tolerance;
    } else {
        const ComplexVector kept = ground.projector * psi0.values();
        summary["decay_rate_fit"] = nullptr;
        if (kept.norm() > 1e-9) {
            const SMatrix o = s_from_amplitudes(AmplitudeVector(kept / kept.norm()));
            const Steadiness steady = coherence_steadiness(traj, o);
            coherence = steady.values;
            // For complex H_p the ground space need not be closed under
            // conjugation, and X⊗O is then not a steady observable.
            const bool checked = matrix_is_real(h.matrix());
            summary["steadiness_max_derivative"] = steady.max_derivative;
            summary["steadiness_checked"] = checked;
            pass = pass && (!checked || steady.max_derivative < options.steadiness_tolerance);
        } else {
            summary["steadiness_max_derivative"] = nullptr;
            summary["steadiness_checked"] = false;
        }
    }
    if (options.dt_halving) {
        const Trajectory half = evolve(rho0, jumps, options.t_max, 0.5 * options.dt, 1);
        const ComplexVector u = ite_reference(psi0, h, options.t_max);
        const double r_full = block_ite_residual(traj.states.back().block(), rho0.gamma(), u);
        const double r_half = block_ite_residual(half.states.back().block(), rho0.gamma(), u);
        summary["final_residual_dt"] = r_full;
        summary["final_residual_half_dt"] = r_half;
        summary["residual_ratio"] = r_half > 0.0 ? json(r_full / r_half) : json(nullptr);
    }
    summary["pass"] = pass;

    std::ostringstream csv;
    csv << "t,trace,block_norm,gamma" << (coherence.empty() ? "" : ",coherence") << "\n";
    csv.precision(17);
    for (std::size_t s = 0; s < traj.times.size(); ++s) {
        csv << traj.times[s] << ',' << traj.states[s].rho().trace().real() << ',' << traj.block_norms[s] << ','
            << traj.states[s].gamma();
        if (!coherence.empty()) {
            csv << ',' << coherence[s];
        }
        csv << '\n';
    }
    Report report;
    report.json = std::move(summary);
    report.csv = csv.str();
    report.exit_code = pass ? kExitPass : kExitFail;
    return report;
}

Report cmd_search(const BitString &target, const SearchOptions &options) {
    const int n = target.size();
    const SearchOracle oracle(n, target);
    const ComplexMatrix rho_out = run_protocol(oracle);
    const XBasisSampler sampler(x_basis_probabilities(rho_out));
    const SearchResult result = search_with_sampler(sampler, n, sub_seed(options.seed, 1), options.max_batches);
    const SampleBatch batch = sample_x_basis(rho_out, options.shots, sub_seed(options.seed, 2));
    const double sampled_rate =
        static_cast<double>(batch.accepted.size()) / static_cast<double>(batch.outcomes.size());
    bool parity_ok = true;
    for (const BitString &beta : batch.accepted) {
        parity_ok = parity_ok && satisfies_parity(beta, target);
    }
    const bool pass = result.found && *result.found == target && parity_ok;
    Report report;
    report.json = {{"schema", 1},
                   {"command", "search"},
                   {"n", n},
                   {"target", target.str()},
                   {"found", result.found ? json(result.found->str()) : json(nullptr)},
                   {"oracle_queries", result.stats.oracle_queries},
                   {"acceptance_rate", sampled_rate},
                   {"acceptance_rate_exact", 0.5 - std::ldexp(1.0, -(n + 1))},
                   {"search_acceptance_rate", result.stats.acceptance_rate},
                   {"independence_rate", result.stats.independence_rate},
                   {"batches", result.stats.batches},
                   {"shots", options.shots},
                   {"parity_ok", parity_ok},
                   {"seed", options.seed},
                   {"pass", pass}};
    report.csv = "n,target,found,oracle_queries,acceptance_rate,independence_rate,seed,pass\n" + std::to_string(n) +
                 "," + target.str() + "," + (result.found ? result.found->str() : "") + "," +
                 std::to_string(result.stats.oracle_queries) + "," + csv_number(sampled_rate) + "," +
                 csv_number(result.stats.independence_rate) + "," + std::to_string(options.seed) + "," +
                 (pass ? "true" : "false") + "\n";
    report.exit_code = pass ? kExitPass : kExitFail;
    return report;
}

}  // namespace pqc
