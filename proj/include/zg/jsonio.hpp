#pragma once

#include <json.hpp>

#include "zg/cuts.hpp"
#include "zg/divisor.hpp"
#include "zg/epseq.hpp"
#include "zg/semantics.hpp"
#include "zg/topology.hpp"

namespace zg {

// All numbers are serialized as exact strings; insertion order is preserved
// so transcripts are byte-stable.
using ojson = nlohmann::ordered_json;

ojson json_of(const Poly& p);
ojson json_of(const FiniteDivisor& d);
ojson json_of(const SplitScalar& s);
ojson json_of(const EPSeq& s);
ojson json_of(const Cut& c);
ojson json_of(const UltrafilterSpec& u);
ojson json_of(const AdmissibleTriple& tr);
ojson json_of(const ModulePoint& n);
ojson json_of(const SubgroupDesc& s);
ojson json_of(const SumNormalForm& f);
ojson json_of(const ConjNormalForm& f);
ojson json_of(const TripleValidation& v);
ojson json_of(const ShiftWitness& w);
ojson json_of(const Classification& c);
ojson json_of(const PairScalar& s);
ojson json_of(const BasicOpenPair& p);
ojson json_of(const TripleMembership& m);
ojson json_of(const WitnessReport& w);
ojson json_of(const DerivativePair& d);
ojson json_of(const SuperdecomposabilityReport& r);
ojson json_of(const DenseChainWitness& w);

} // namespace zg
