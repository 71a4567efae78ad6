#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "pcanlab/sphmod.hpp"

namespace pcanlab {

enum class BasisKind { regular, spherical, antispherical };
enum class Provenance { internal_p0, file, oracle_v1 };

const char* basis_name(BasisKind k);
const char* provenance_name(Provenance p);

// p-canonical basis data.  Entries missing from the map fall back to the
// KL basis when the table is the characteristic-zero provider.
struct PCanTable {
    std::string type;
    int p = 0;
    BasisKind basis = BasisKind::regular;
    Provenance provenance = Provenance::internal_p0;
    bool graded = true;  // false: coefficients are only known at v = 1
    std::string note;
    std::shared_ptr<const SphMod> mod;
    std::map<Wext, Terms> entries;

    const WextGroup& group() const { return mod->group(); }
    bool has(const Wext& w) const;
    Terms entry(const Wext& w) const;
};

PCanTable make_p0_table(std::shared_ptr<const SphMod> mod, BasisKind kind = BasisKind::regular, int max_len = -1);
Terms pcan_p0(const Hecke& H, const Wext& w);

// Parsing and printing of the pcan/1 format.  Printing is canonical, so a
// canonical file round-trips byte for byte.
PCanTable parse_table(const std::string& text, std::shared_ptr<const SphMod> mod = nullptr);
PCanTable load_table(const std::string& path, std::shared_ptr<const SphMod> mod = nullptr);
std::string table_to_string(const PCanTable& t);
void save_table(const PCanTable& t, const std::string& path);
std::string bundled_table_path(const std::string& name);
// Module context for a group tag, shared per tag.
std::shared_ptr<const SphMod> module_for(const std::string& tag);

ModElt pcan_asph(const PCanTable& t, const Wext& w);
ModElt pcan_sph(const PCanTable& t, const Wext& x);

struct Report {
    std::string name;
    bool pass = true;
    bool hypothesis_ok = true;
    std::string hypothesis;
    std::vector<std::string> lines;
    std::vector<std::pair<std::string, std::string>> sides;  // lhs, rhs

    std::string str() const;
};

using WeightMultiset = std::vector<std::pair<Weight, long>>;

// Weights of the Weyl module of highest weight l (dominant), by Freudenthal's formula.
WeightMultiset weyl_character(const RootDatum& rd, const Weight& l);
// Weight multiset of an A1 tilting character from the SL2 oracle.
WeightMultiset sl2_tilting_weights(int lambda, int p);

Report verify_donkin(const PCanTable& t, const Weight& l, const Wext& x, const WeightMultiset& tilting);
Report verify_steinberg(const PCanTable& t, const Weight& l, const Wext& x, const WeightMultiset& tilting);
Report verify_phi(const PCanTable& t, const Weight& sigma, const Wext& w);
Report verify_character_sl2(const PCanTable& t, int p, int lambda_max);
Report verify_positivity(const PCanTable& t);
Report verify_omega(const PCanTable& t);
// Spherical decomposition M_{w0 x_l} against sums of M_{w0 x_mu}.
Report verify_spherical_decomposition(const PCanTable& t, int lambda, const std::map<int, long long>& mult);

}  // namespace pcanlab
