// SPDX-License-Identifier: Apache-2.0
//
// nearsec - secure beam focusing for near-field hybrid MIMO transmitters
// Copyright (C) 2026 The nearsec authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "nearsec/io.hpp"

#include <fstream>

#include <fmt/format.h>
#include <json.hpp>

#include "nearsec/error.hpp"

namespace nearsec {

namespace {

std::string num(double v) { return fmt::format("{:.12g}", v); }

}  // namespace

void write_matrix_csv(std::ostream& os, const ComplexMatrix& m) {
    os << "row,col,re,im\n";
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            os << fmt::format("{},{},{:.17g},{:.17g}\n", i, j, m(i, j).real(), m(i, j).imag());
        }
    }
}

void write_run_csv(std::ostream& os, const ScenarioResult& result) {
    os << "trial,seed,cs_fd,cu_fd,ce_fd,power_fd,bcd_iters,bcd_converged,"
          "cs_hybrid,cu_hybrid,ce_hybrid,power_hybrid,ao_iters,ao_converged,residual,rescale\n";
    for (const auto& t : result.trials) {
        const auto& f = t.fd_report;
        const auto& h = t.hybrid_report;
        os << fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n", t.index, t.seed,
                          num(f.c_s), num(f.c_u), num(f.c_e), num(f.transmit_power),
                          t.fd.iterations, t.fd.converged ? 1 : 0, num(h.c_s), num(h.c_u),
                          num(h.c_e), num(h.transmit_power), t.hybrid.iterations,
                          t.hybrid.converged ? 1 : 0, num(t.hybrid.final_residual),
                          num(t.hybrid.rescale_factor));
    }
}

void write_sweep_pmax_csv(std::ostream& os, const std::vector<PmaxRow>& rows) {
    os << "p_max_dbm,cs_fd_mean,cs_fd_std,cs_hybrid_mean,cs_hybrid_std\n";
    for (const auto& r : rows) {
        os << fmt::format("{},{},{},{},{}\n", num(r.p_max_dbm), num(r.fd.mean), num(r.fd.stddev),
                          num(r.hybrid.mean), num(r.hybrid.stddev));
    }
}

void write_sweep_eve_csv(std::ostream& os, const std::vector<EveRow>& rows, ChannelModel model) {
    os << "model,eve_distance_m,eve_angle_deg,cs_fd_mean,cs_fd_std,cs_hybrid_mean,cs_hybrid_std\n";
    for (const auto& r : rows) {
        os << fmt::format("{},{},{},{},{},{},{}\n", to_string(model), num(r.location.distance),
                          num(rad2deg(r.location.azimuth)), num(r.fd.mean), num(r.fd.stddev),
                          num(r.hybrid.mean), num(r.hybrid.stddev));
    }
}

void write_spectrum_csv(std::ostream& os, const SpectrumMap& map) {
    os << "distance_m,angle_deg,normalized_power\n";
    for (const auto& p : map.points) {
        os << fmt::format("{},{},{}\n", num(p.location.distance), num(rad2deg(p.location.azimuth)),
                          num(p.power));
    }
}

void write_bcd_trace_csv(std::ostream& os, const std::vector<TracePoint>& trace) {
    os << "iteration,c_s_bits,surrogate_nats,mu,power_watts\n";
    for (std::size_t n = 0; n < trace.size(); ++n) {
        const auto& t = trace[n];
        os << fmt::format("{},{},{},{},{}\n", n, num(t.c_s), num(t.surrogate), num(t.mu),
                          num(t.power));
    }
}

void write_trace_csv(std::ostream& os, const ConvergenceTrace& trace) {
    os << "loop,iteration,c_s_bits,d_e\n";
    for (std::size_t n = 0; n < trace.bcd.size(); ++n) {
        os << fmt::format("bcd,{},{},\n", n, num(trace.bcd[n].c_s));
    }
    for (std::size_t n = 0; n < trace.ao_residual.size(); ++n) {
        const std::string cs = n < trace.ao_c_s.size() ? num(trace.ao_c_s[n]) : "";
        os << fmt::format("ao,{},{},{}\n", n, cs, num(trace.ao_residual[n]));
    }
}

std::string beamformer_metadata_json(const TrialResult& trial, const SystemConfig& config) {
    const auto& bf = trial.hybrid.beamformer;
    nlohmann::ordered_json j;
    j["trial"] = trial.index;
    j["seed"] = trial.seed;
    j["num_tx"] = bf.p.rows();
    j["num_rf_chains"] = bf.p.cols();
    j["num_streams"] = bf.w.cols();
    j["p_max_w"] = config.p_max();
    j["residual"] = trial.hybrid.final_residual;
    j["rescale_factor"] = trial.hybrid.rescale_factor;
    j["power_rescaled"] = trial.hybrid.rescale_factor < 1.0;
    j["bcd_iterations"] = trial.fd.iterations;
    j["bcd_converged"] = trial.fd.converged;
    j["ao_iterations"] = trial.hybrid.iterations;
    j["ao_converged"] = trial.hybrid.converged;
    j["c_s_fd"] = trial.fd_report.c_s;
    j["c_s_hybrid"] = trial.hybrid_report.c_s;
    j["c_s_hybrid_before_rescale"] = trial.hybrid.c_s_before_rescale;
    return j.dump(2) + "\n";
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ArgumentError(fmt::format("cannot write '{}'", path.string()));
    out << content;
    if (!out) throw ArgumentError(fmt::format("write to '{}' failed", path.string()));
}

}  // namespace nearsec
