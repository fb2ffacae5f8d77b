#include "dung/asp_emit.hpp"

#include <initializer_list>
#include <string>

#include "dung/apx.hpp"

namespace dung {
namespace {

constexpr std::string_view kTags[] = {"cf",         "adm",        "stg_saturation",
                                      "prf_metasp", "sem_metasp", "stg_metasp",
                                      "rground_metasp", "rground_metasp_prime", "grd_star_handcraft"};

// Encoding modules, gringo syntax.

constexpr std::string_view kCf = R"(% cf
in(X) :- not out(X), arg(X).
out(X) :- not in(X), arg(X).
:- in(X), in(Y), defeat(X,Y).
)";

constexpr std::string_view kRange = R"(% range
in_range(X) :- in(X).
in_range(X) :- in(Y), defeat(Y,X).
not_in_range(X) :- arg(X), not in_range(X).
)";

constexpr std::string_view kSatstage = R"(% satstage
inN(X) | outN(X) :- arg(X).
fail :- inN(X), inN(Y), defeat(X,Y).
fail :- eqplus.
fail :- in_range(X), not_in_rangeN(X).
inN(X) :- fail, arg(X).
outN(X) :- fail, arg(X).
:- not fail.
)";

constexpr std::string_view kRangeN = R"(% rangeN
undefeated_upto(X,Y) :- inf(Y), outN(X), outN(Y).
undefeated_upto(X,Y) :- inf(Y), outN(X), not att(Y,X).
undefeated_upto(X,Y) :- succ(Z,Y), undefeated_upto(X,Z), outN(Y).
undefeated_upto(X,Y) :- succ(Z,Y), undefeated_upto(X,Z), not att(Y,X).
not_in_rangeN(X) :- sup(Y), outN(X), undefeated_upto(X,Y).
in_rangeN(X) :- inN(X).
in_rangeN(X) :- outN(X), inN(Y), att(Y,X).
)";

constexpr std::string_view kEqPlus = R"(% eq_plus
eqp_upto(X) :- inf(X), in_range(X), in_rangeN(X).
eqp_upto(X) :- inf(X), not_in_range(X), not_in_rangeN(X).
eqp_upto(X) :- succ(Z,X), in_range(X), in_rangeN(X), eqp_upto(Z).
eqp_upto(X) :- succ(Y,X), not_in_range(X), not_in_rangeN(X), eqp_upto(Y).
eqplus :- sup(X), eqp_upto(X).
)";

constexpr std::string_view kAdm = R"(% adm
defeated(X) :- in(Y), att(Y,X).
:- in(X), att(Y,X), not defeated(Y).
)";

constexpr std::string_view kRes = R"(% res
att_minus_beta(X,Y) :- defeat(X,Y), not att_minus_beta(Y,X), X != Y.
att_minus_beta(X,Y) :- defeat(X,Y), not defeat(Y,X).
att_minus_beta(X,X) :- defeat(X,X).
)";

constexpr std::string_view kCom = R"(% com
undefended(X) :- att_minus_beta(Y,X), not defeated(Y).
:- out(X), not undefended(X).
)";

constexpr std::string_view kArgSet = R"(% arg_set
arg_set(N,X) :- arg(X), inf(N).
inU(N,X) :- in(X), inf(N).
defeatN(N,Y,X) :- arg_set(N,X), arg_set(N,Y), defeat(Y,X).
)";

constexpr std::string_view kGroundN = R"(% groundN
inS(N,X) :- defendedN(N,X).
)";

constexpr std::string_view kFMinusRange = R"(% F_minus_range
in_SplusN(N,X) :- inS(N,X).
in_SplusN(N,X) :- inS(N,Y), defeatN(N,Y,X).
u_cap_Splus(N,X) :- inU(N,X), in_SplusN(N,X).
:- u_cap_Splus(N,X), not inS(N,X).
:- not u_cap_Splus(N,X), inS(N,X).
cut(N,X) :- arg_set(N,X), not in_SplusN(N,X).
)";

constexpr std::string_view kMr = R"(% MR
reach(N,X,Y) :- cut(N,X), cut(N,Y), defeatN(N,X,Y).
reach(N,X,Y) :- cut(N,X), defeatN(N,X,Z), reach(N,Z,Y), X!=Y.
self_defeat(N,X) :- cut(N,X), defeatN(N,X,X).
nsym(N,X) :- cut(N,X), cut(N,Y), defeatN(N,X,Y), not defeatN(N,Y,X), reach(N,X,Y), reach(N,Y,X), X!=Y.
nsym(N,Y) :- cut(N,X), cut(N,Y), defeatN(N,X,Y), not defeatN(N,Y,X), reach(N,X,Y), reach(N,Y,X), X!=Y.
reachnotvia(N,X,V,Y) :- defeatN(N,X,Y), cut(N,V), reach(N,X,Y), reach(N,Y,X), X!=V, Y!=V.
reachnotvia(N,X,V,Y) :- reachnotvia(N,X,V,Z), reach(N,X,Y), reachnotvia(N,Z,V,Y), reach(N,Y,X), Z!=V, X!=V, Y!=V.
cyc(N,X,Y,Z) :- defeatN(N,X,Y), defeatN(N,Y,X), defeatN(N,Y,Z), defeatN(N,Z,Y), reachnotvia(N,X,Y,Z), X!=Y, Y!=Z, X!=Z.
bad(N,Y) :- cyc(N,X,U,V), reach(N,X,Y), reach(N,Y,X).
bad(N,Y) :- self_defeat(N,X), reach(N,X,Y), reach(N,Y,X).
pos_mr(N,X) :- cut(N,X), not bad(N,X), not self_defeat(N,X), not nsym(N,X).
notminimal(N,Z) :- reach(N,X,Y), reach(N,Y,X), reach(N,X,Z), not reach(N,Z,X).
mr(N,X) :- pos_mr(N,X), not notminimal(N,X).
)";

constexpr std::string_view kStableN = R"(% stableN
t(N,X) :- inU(N,X), not inS(N,X).
nemptyT(N) :- t(N,X).
emptyT(N) :- not nemptyT(N), arg_set(N,X).
existsMR(N) :- mr(N,X), cut(N,X).
not_exists_mr(N) :- not existsMR(N), cut(N,X).
true(N) :- emptyT(N), not existsMR(N).
:- not_exists_mr(N), nemptyT(N).
defeated(N,X) :- mr(N,X), mr(N,Y), t(N,Y), defeatN(N,Y,X).
:- not t(N,X), not defeated(N,X), mr(N,X).
)";

constexpr std::string_view kIterate = R"(% iterate
t_mrOplus(N,Y) :- t(N,X), mr(N,X), defeatN(N,X,Y).
arg_set(M,X) :- cut(N,X), not mr(N,X), not t_mrOplus(N,X), succ(N,M), not true(N).
inU(M,X) :- t(N,X), not mr(N,X), succ(N,M), not true(N).
)";

// Helper modules used by the ones above.

constexpr std::string_view kOrder = R"(% reconstructed: order
lt(X,Y) :- arg(X), arg(Y), X<Y.
nsucc(X,Z) :- lt(X,Y), lt(Y,Z).
succ(X,Y) :- lt(X,Y), not nsucc(X,Y).
ninf(Y) :- lt(X,Y).
nsup(X) :- lt(X,Y).
inf(X) :- not ninf(X), arg(X).
sup(X) :- not nsup(X), arg(X).
)";

// Several rule bodies read att/2 rather than the input relation.
constexpr std::string_view kAttFromDefeat = R"(% reconstructed: att
att(X,Y) :- defeat(X,Y).
)";

constexpr std::string_view kAttFromResolution = R"(% reconstructed: att
att(X,Y) :- att_minus_beta(X,Y).
)";

constexpr std::string_view kGrd = R"(% reconstructed: grd
defeated_upto_def(X,Y) :- inf(Y), arg(X), not att_minus_beta(Y,X).
defeated_upto_def(X,Y) :- inf(Y), in(Z), att_minus_beta(Z,Y), att_minus_beta(Y,X).
defeated_upto_def(X,Y) :- succ(Z,Y), defeated_upto_def(X,Z), not att_minus_beta(Y,X).
defeated_upto_def(X,Y) :- succ(Z,Y), defeated_upto_def(X,Z), in(V), att_minus_beta(V,Y), att_minus_beta(Y,X).
defended(X) :- sup(Y), defeated_upto_def(X,Y).
in(X) :- defended(X).
)";

constexpr std::string_view kDefendedN = R"(% reconstructed: defendedN
defeated_upto_defN(N,X,Y) :- inf(Y), arg_set(N,X), not defeatN(N,Y,X).
defeated_upto_defN(N,X,Y) :- inf(Y), inS(N,Z), defeatN(N,Z,Y), defeatN(N,Y,X).
defeated_upto_defN(N,X,Y) :- succ(Z,Y), defeated_upto_defN(N,X,Z), not defeatN(N,Y,X).
defeated_upto_defN(N,X,Y) :- succ(Z,Y), defeated_upto_defN(N,X,Z), inS(N,V), defeatN(N,V,Y), defeatN(N,Y,X).
defendedN(N,X) :- sup(Y), defeated_upto_defN(N,X,Y).
)";

constexpr std::string_view kMinimizeOut = R"(% minimize
optimize(1,1,incl).
#minimize[out].
)";

constexpr std::string_view kMinimizeNotInRange = R"(% minimize
optimize(1,1,incl).
#minimize[not_in_range].
)";

constexpr std::string_view kMinimizeIn = R"(% minimize
optimize(1,1,incl).
#minimize[in].
)";

std::string join(std::initializer_list<std::string_view> modules) {
  std::string out;
  for (std::string_view m : modules) {
    if (!out.empty()) out += '\n';
    out += m;
  }
  return out;
}

}  // namespace

std::string_view to_string(EncodingId id) noexcept { return kTags[static_cast<std::size_t>(id)]; }

std::optional<EncodingId> parse_encoding(std::string_view tag) noexcept {
  for (EncodingId id : kAllEncodings)
    if (to_string(id) == tag) return id;
  return std::nullopt;
}

bool is_optimization(EncodingId id) noexcept {
  switch (id) {
    case EncodingId::kPrfMetasp:
    case EncodingId::kSemMetasp:
    case EncodingId::kStgMetasp:
    case EncodingId::kRgroundMetasp:
    case EncodingId::kRgroundMetaspPrime:
      return true;
    default:
      return false;
  }
}

Semantics realized_semantics(EncodingId id) noexcept {
  switch (id) {
    case EncodingId::kCf:
      return Semantics::kCf;
    case EncodingId::kAdm:
      return Semantics::kAdm;
    case EncodingId::kStgSaturation:
    case EncodingId::kStgMetasp:
      return Semantics::kStg;
    case EncodingId::kPrfMetasp:
      return Semantics::kPrf;
    case EncodingId::kSemMetasp:
      return Semantics::kSem;
    case EncodingId::kRgroundMetasp:
    case EncodingId::kRgroundMetaspPrime:
    case EncodingId::kGrdStarHandcraft:
      return Semantics::kGrdStar;
  }
  return Semantics::kCf;
}

std::string emit_instance(const Framework& af) { return serialize_apx(af); }

std::string emit_encoding(EncodingId id) {
  switch (id) {
    case EncodingId::kCf:
      return join({kCf});
    case EncodingId::kAdm:
      return join({kAttFromDefeat, kCf, kAdm});
    case EncodingId::kStgSaturation:
      return join({kAttFromDefeat, kCf, kOrder, kRange, kRangeN, kEqPlus, kSatstage});
    case EncodingId::kPrfMetasp:
      return join({kAttFromDefeat, kCf, kAdm, kMinimizeOut});
    case EncodingId::kSemMetasp:
      return join({kAttFromDefeat, kCf, kAdm, kRange, kMinimizeNotInRange});
    case EncodingId::kStgMetasp:
      return join({kCf, kRange, kMinimizeNotInRange});
    case EncodingId::kRgroundMetasp:
      return join({kOrder, kGrd, kRes, kMinimizeIn});
    case EncodingId::kRgroundMetaspPrime:
      return join({kAttFromResolution, kCf, kAdm, kCom, kRes, kMinimizeIn});
    case EncodingId::kGrdStarHandcraft:
      return join({kCf, kOrder, kArgSet, kDefendedN, kGroundN, kFMinusRange, kMr, kStableN, kIterate});
  }
  return {};
}

AspJob emit_job(const Framework& af, EncodingId id) {
  return AspJob{emit_instance(af), emit_encoding(id), is_optimization(id), realized_semantics(id)};
}

}  // namespace dung
