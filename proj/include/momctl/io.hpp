#pragma once

#include "momctl/auxiliary.hpp"
#include "momctl/bilinear.hpp"
#include "momctl/control.hpp"
#include "momctl/hypotheses.hpp"
#include "momctl/moment.hpp"
#include "momctl/real.hpp"
#include "momctl/sequence.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace momctl {

using Json = nlohmann::ordered_json;

// Every high-precision number is serialized as a decimal string; digits = 0
// uses the current working precision.
Json jreal(const Real& x, unsigned digits = 0);

Json to_json(const Certificate& c, unsigned digits = 30);
Json to_json(const WeylFit& f, unsigned digits = 30);
Json to_json(const GapCertificate& g, unsigned digits = 30);
Json to_json(const StructuralConstants& c, unsigned digits = 30);
Json to_json(const MomentSolution& s, unsigned digits = 0);
Json to_json(const ControlSolution& s, unsigned digits = 30);
Json to_json(const CostScan& s, unsigned digits = 30);
Json to_json(const BilinearResult& r, unsigned digits = 30);

// CSV with header k,value,l_index,m_index (lattice columns empty when the
// sequence carries no labels).
void write_spectrum_csv(const std::string& path, const SpectralSequence& seq,
                        unsigned digits = 0);
void write_lattice_csv(const std::string& path, const LatticeSpectrum& spec,
                       unsigned digits = 0);
SpectralSequence read_spectrum_csv(const std::string& path);

// One decimal value per line (or comma-separated).
std::vector<Real> read_reals_file(const std::string& path);
std::vector<Real> parse_reals_csv(const std::string& text);

void write_json_file(const std::string& path, const Json& j);
Json read_json_file(const std::string& path);

// FNV-1a 64-bit hash of the canonical dump, as fixed-width hex.
std::string config_hash(const Json& config);

// Wraps a payload with reproducibility metadata (config, its hash, seed,
// precision) before writing.
Json with_provenance(const Json& payload, const Json& config, std::uint64_t seed,
                     unsigned digits);

}  // namespace momctl
