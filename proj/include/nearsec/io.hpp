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

#pragma once

#include <filesystem>
#include <ostream>
#include <string>

#include "nearsec/harness.hpp"

// CSV writers. Every file has a header row, '.' decimal point, no locale
// dependence and a fixed column order, so equal inputs give equal bytes.
namespace nearsec {

// Long format, row-major: row,col,re,im
void write_matrix_csv(std::ostream& os, const ComplexMatrix& m);

// trial,seed,cs_fd,cu_fd,ce_fd,power_fd,bcd_iters,bcd_converged,
// cs_hybrid,cu_hybrid,ce_hybrid,power_hybrid,ao_iters,ao_converged,residual,rescale
void write_run_csv(std::ostream& os, const ScenarioResult& result);

// p_max_dbm,cs_fd_mean,cs_fd_std,cs_hybrid_mean,cs_hybrid_std
void write_sweep_pmax_csv(std::ostream& os, const std::vector<PmaxRow>& rows);

// model,eve_distance_m,eve_angle_deg,cs_fd_mean,cs_fd_std,cs_hybrid_mean,cs_hybrid_std
void write_sweep_eve_csv(std::ostream& os, const std::vector<EveRow>& rows, ChannelModel model);

// distance_m,angle_deg,normalized_power
void write_spectrum_csv(std::ostream& os, const SpectrumMap& map);

// iteration,c_s_bits,surrogate_nats,mu,power_watts
void write_bcd_trace_csv(std::ostream& os, const std::vector<TracePoint>& trace);

// loop,iteration,c_s_bits,d_e  (loop is "bcd" or "ao"; d_e empty for bcd rows,
// c_s_bits empty for ao rows without secrecy stopping)
void write_trace_csv(std::ostream& os, const ConvergenceTrace& trace);

// JSON record describing an exported hybrid beamformer.
std::string beamformer_metadata_json(const TrialResult& trial, const SystemConfig& config);

// Writes `content` to `path`, creating parent directories.
void write_file(const std::filesystem::path& path, const std::string& content);

}  // namespace nearsec
