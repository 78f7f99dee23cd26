#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>

namespace treereduce {

enum class RelationFamily { Identity, DwSim, DwLa, UpSim, UpLa };

/**
 * @brief  Symbolic name of a relation kind, e.g. the strict upward simulation
 *         induced by the identity.
 *
 * Text form (parse_spec / to_string):
 *
 *     id | dw-sim | dw-la:K | up-sim(INNER) | up-la:K(INNER)
 *
 * each optionally prefixed by "strict-", e.g. "strict-up-la:4(dw-sim)".
 */
struct RelationSpec
{
	RelationFamily family = RelationFamily::Identity;
	bool strict = false;
	unsigned k = 1;                                 ///< lookahead families only
	std::shared_ptr<const RelationSpec> inducing;   ///< upward families only

	bool is_upward() const { return family == RelationFamily::UpSim || family == RelationFamily::UpLa; }
	bool is_downward() const { return family == RelationFamily::DwSim || family == RelationFamily::DwLa; }
	bool is_lookahead() const { return family == RelationFamily::DwLa || family == RelationFamily::UpLa; }

	static RelationSpec identity();
	static RelationSpec dw_sim(bool strict = false);
	static RelationSpec dw_la(unsigned k, bool strict = false);
	static RelationSpec up_sim(RelationSpec inducing, bool strict = false);
	static RelationSpec up_la(unsigned k, RelationSpec inducing, bool strict = false);
};

bool operator==(const RelationSpec& a, const RelationSpec& b);

/// Throws CatalogError on malformed text or a malformed spec.
RelationSpec parse_spec(std::string_view text);
std::string to_string(const RelationSpec& spec);

/// Throws CatalogError unless the spec is well formed: strict identity,
/// inducing on a non-upward family, an upward inducing relation, a missing
/// inducing relation and k = 0 are all rejected.
void validate_spec(const RelationSpec& spec);

enum class Verdict { Yes, No, Invalid };

std::string to_string(Verdict v);

/**
 * Whether P(u, d) is good for pruning. @p u must be the identity or upward,
 * @p d the identity or downward. Lookahead families are looked up as the
 * trace inclusions they under-approximate (k = 1 as the simulation).
 * Invalid marks the reflexive combinations where the order is not strict.
 */
Verdict gfp_allowed(const RelationSpec& u, const RelationSpec& d);

/// Whether the kernel of @p r is good for quotienting. Strict specs are Invalid.
Verdict gfq_allowed(const RelationSpec& r);

} // namespace treereduce
