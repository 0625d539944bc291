#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "daisy/constraint_system.hpp"
#include "daisy/daisy_model.hpp"
#include "daisy/density_record.hpp"
#include "daisy/products.hpp"
#include "daisy/solver.hpp"

namespace daisy {

/// A forbidden configuration for ex(n, F): a daisy pattern (direct generator)
/// or an arbitrary small uniform hypergraph (generic copy enumeration).
class ExProblem {
 public:
  static ExProblem daisy(const DaisyPattern& pattern);
  static ExProblem forbidden(const UniformHypergraph& h);

  const std::string& id() const { return id_; }
  unsigned uniformity() const { return r_; }
  const std::optional<DaisyPattern>& pattern() const { return pattern_; }
  ConstraintSystem system(unsigned n) const;

 private:
  std::string id_;
  unsigned r_ = 0;
  std::optional<DaisyPattern> pattern_;
  std::optional<UniformHypergraph> forbidden_;
};

/// "D3(4,2)" style id.
std::string pattern_id(const DaisyPattern& pattern);

struct ExTable {
  std::vector<DensityRecord> records;
  std::vector<std::string> notes;
  /// ex(n)/binom(n,r) never increases across exact rows.
  bool monotone = true;
};

inline constexpr std::size_t kMaxTableItems = 128;

/// One exact solve per n in [n_from, n_to]. Rows with n < r or more than
/// max_items r-sets are skipped with a note; rows the solver could not close
/// are kept with is_exact = false. Daisy rows carry closed_form_bounds.
ExTable ex_table(const ExProblem& problem, unsigned n_from, unsigned n_to, const SolverConfig& cfg = {},
                 std::size_t max_items = kMaxTableItems);

/// Closed-form bounds that apply to D_r(s,t) at ground size n:
///  - upper_t_eq_s_minus_1: density <= (s-1)/(r+1), when t = s-1 and n >= r+1;
///  - upper_t_eq_1: count <= binom(n, r-1)(s-1)/r, when t = 1;
///  - lower_multipartite: limit density >= r!/r^r, for (s,t) = (4,2);
///  - lower_multipartite_count: count >= size of the complete r-partite
///    family at n, for (s,t) = (4,2) and n >= r.
std::vector<NamedBound> closed_form_bounds(const DaisyPattern& pattern, unsigned n);

struct BoundReport {
  std::size_t checks = 0;
  std::vector<std::string> violations;
};

/// Compares every exact row against its checkable bounds. Throws
/// BoundViolation listing all violations when any check fails.
BoundReport verify_bounds(const std::vector<DensityRecord>& records);

enum class ExportFormat { json, csv };
ExportFormat parse_export_format(const std::string& text);

/// JSON: {"schema": "daisy-density-table/1", "records": [...]}; CSV columns:
/// problem,n,value,is_exact,ratio,decimal,bounds.
void export_records(std::ostream& out, const std::vector<DensityRecord>& records, ExportFormat format);
std::vector<DensityRecord> read_records_json(std::istream& in);

}  // namespace daisy
