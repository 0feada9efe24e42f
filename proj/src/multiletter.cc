#include "infomask/multiletter.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "infomask/rng.h"

namespace infomask {
namespace {

// Depth-first walk over all length-n sequences in lexicographic order,
// carrying the running product of per-symbol weights. Zero-weight prefixes
// are pruned.
template <class Weight, class Visit>
void WalkSequences(int n, int alphabet, const Weight& weight, const Visit& visit) {
  auto rec = [&](auto&& self, int pos, std::uint64_t index, double prob) -> void {
    if (pos == n) {
      visit(index, prob);
      return;
    }
    for (int s = 0; s < alphabet; ++s) {
      const double w = weight(s);
      if (w <= 0.0) continue;
      self(self, pos + 1, index * static_cast<std::uint64_t>(alphabet) + s, prob * w);
    }
  };
  rec(rec, 0, 0, 1.0);
}

double EntropyOfCounts(const std::vector<double>& mass) {
  double total = 0.0;
  for (double m : mass) total += m;
  double h = 0.0;
  for (double m : mass) {
    if (m > 0.0) h -= m / total * std::log2(m / total);
  }
  return h;
}

void RequireXY(const JointPmf& j) {
  if (j.rank() != 2 || !j.has_axis(kAxisX) || !j.has_axis(kAxisY)) {
    throw Error(ErrorCode::kDimensionMismatch, "expected a joint over {X, Y}");
  }
}

// Conditional p(b | a) for the {X, Y} joint, row-major by `a`.
std::vector<double> Conditional(const JointPmf& j, bool y_given_x) {
  const JointPmf xy = PermuteAxes(j, {std::string(kAxisX), std::string(kAxisY)});
  const int nx = xy.sizes()[0];
  const int ny = xy.sizes()[1];
  const int rows = y_given_x ? nx : ny;
  const int cols = y_given_x ? ny : nx;
  std::vector<double> cond(static_cast<std::size_t>(rows * cols), 0.0);
  for (int a = 0; a < rows; ++a) {
    double total = 0.0;
    for (int b = 0; b < cols; ++b) {
      const int x = y_given_x ? a : b;
      const int y = y_given_x ? b : a;
      total += xy.probs()[static_cast<std::size_t>(x * ny + y)];
    }
    if (total <= 0.0) continue;
    for (int b = 0; b < cols; ++b) {
      const int x = y_given_x ? a : b;
      const int y = y_given_x ? b : a;
      cond[static_cast<std::size_t>(a * cols + b)] =
          xy.probs()[static_cast<std::size_t>(x * ny + y)] / total;
    }
  }
  return cond;
}

// H(F_other | S^n) where S is the outer source and F_other is the encoder of
// the inner source, plus the joint message histogram when requested.
double ConditionalMessageEntropy(int n, const Pmf& outer_marginal,
                                 const std::vector<double>& inner_given_outer,
                                 int inner_alphabet, const EncoderTable& outer_enc,
                                 const EncoderTable& inner_enc,
                                 std::vector<double>* joint_hist, bool outer_is_x) {
  const int outer_alphabet = outer_marginal.size();
  std::vector<double> cond(static_cast<std::size_t>(inner_enc.num_messages));
  double h = 0.0;
  WalkSequences(
      n, outer_alphabet, [&](int s) { return outer_marginal[s]; },
      [&](std::uint64_t outer_index, double p_outer) {
        std::fill(cond.begin(), cond.end(), 0.0);
        const int outer_msg = outer_enc.table[outer_index];
        // Re-walk the outer sequence's symbols to weight the inner walk.
        const std::vector<int> outer_seq = SequenceFromIndex(outer_index, n, outer_alphabet);
        auto rec = [&](auto&& self, int pos, std::uint64_t index, double prob) -> void {
          if (pos == n) {
            const int inner_msg = inner_enc.table[index];
            cond[static_cast<std::size_t>(inner_msg)] += prob;
            if (joint_hist != nullptr) {
              const int fx = outer_is_x ? outer_msg : inner_msg;
              const int fy = outer_is_x ? inner_msg : outer_msg;
              const int my = outer_is_x ? inner_enc.num_messages : outer_enc.num_messages;
              (*joint_hist)[static_cast<std::size_t>(fx * my + fy)] += p_outer * prob;
            }
            return;
          }
          const std::size_t row = static_cast<std::size_t>(outer_seq[static_cast<std::size_t>(pos)]) *
                                  static_cast<std::size_t>(inner_alphabet);
          for (int s = 0; s < inner_alphabet; ++s) {
            const double w = inner_given_outer[row + static_cast<std::size_t>(s)];
            if (w <= 0.0) continue;
            self(self, pos + 1, index * static_cast<std::uint64_t>(inner_alphabet) + s,
                 prob * w);
          }
        };
        rec(rec, 0, 0, 1.0);
        h += p_outer * EntropyOfCounts(cond);
      });
  return h;
}

void CheckCount(std::uint64_t count, std::uint64_t cap, const char* what) {
  if (count > cap) {
    throw Error(ErrorCode::kSizeGuard, std::string(what) + " exceeds the enumeration cap");
  }
}

std::uint64_t SaturatingMul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return a * b;
}

std::uint64_t SaturatingPow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) r = SaturatingMul(r, base);
  return r;
}

std::vector<MultiLetterPoint> Dedup(std::vector<MultiLetterPoint> pts) {
  std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
    return a.ix < b.ix || (a.ix == b.ix && a.iy < b.iy);
  });
  std::vector<MultiLetterPoint> out;
  for (const auto& p : pts) {
    bool dup = false;
    for (auto it = out.rbegin(); it != out.rend() && p.ix - it->ix <= 1e-12; ++it) {
      if (std::abs(p.iy - it->iy) <= 1e-12) {
        dup = true;
        break;
      }
    }
    if (!dup) out.push_back(p);
  }
  return out;
}

}  // namespace

std::uint64_t SequenceCount(int n, int alphabet) {
  return SaturatingPow(static_cast<std::uint64_t>(alphabet), static_cast<std::uint64_t>(n));
}

std::vector<int> SequenceFromIndex(std::uint64_t index, int n, int alphabet) {
  std::vector<int> seq(static_cast<std::size_t>(n));
  for (int pos = n - 1; pos >= 0; --pos) {
    seq[static_cast<std::size_t>(pos)] = static_cast<int>(index % static_cast<std::uint64_t>(alphabet));
    index /= static_cast<std::uint64_t>(alphabet);
  }
  return seq;
}

std::uint64_t IndexOfSequence(std::span<const int> seq, int alphabet) {
  std::uint64_t index = 0;
  for (int s : seq) index = index * static_cast<std::uint64_t>(alphabet) + static_cast<std::uint64_t>(s);
  return index;
}

EncoderTable EncoderTable::Identity(int n, int alphabet) {
  EncoderTable t;
  t.n = n;
  t.input_alphabet = alphabet;
  const std::uint64_t count = SequenceCount(n, alphabet);
  t.num_messages = static_cast<int>(count);
  t.table.resize(count);
  for (std::uint64_t i = 0; i < count; ++i) t.table[i] = static_cast<int>(i);
  return t;
}

EncoderTable EncoderTable::Constant(int n, int alphabet) {
  EncoderTable t;
  t.n = n;
  t.input_alphabet = alphabet;
  t.num_messages = 1;
  t.table.assign(SequenceCount(n, alphabet), 0);
  return t;
}

double EncoderTable::rate() const { return std::log2(static_cast<double>(num_messages)) / n; }

void EncoderTable::Validate() const {
  if (n < 1 || input_alphabet < 1 || num_messages < 1) {
    throw Error(ErrorCode::kDimensionMismatch, "encoder table sizes must be >= 1");
  }
  if (table.size() != SequenceCount(n, input_alphabet)) {
    throw Error(ErrorCode::kDimensionMismatch, "encoder table is not total");
  }
  for (int m : table) {
    if (m < 0 || m >= num_messages) {
      throw Error(ErrorCode::kOutOfRange, "encoder message index out of range");
    }
  }
}

MultiLetterPoint EvaluatePair(const JointPmf& j, const EncoderTable& fx,
                              const EncoderTable& fy, std::uint64_t cap) {
  RequireXY(j);
  fx.Validate();
  fy.Validate();
  if (fx.n != fy.n) throw Error(ErrorCode::kDimensionMismatch, "blocklengths differ");
  const int n = fx.n;
  const int nx = j.size_of(kAxisX);
  const int ny = j.size_of(kAxisY);
  if (fx.input_alphabet != nx || fy.input_alphabet != ny) {
    throw Error(ErrorCode::kDimensionMismatch, "encoder alphabet does not match source");
  }
  CheckCount(SaturatingMul(SequenceCount(n, nx), SequenceCount(n, ny)), cap,
             "sequence-pair count");

  const Pmf px = MarginalPmf(j, kAxisX);
  const Pmf py = MarginalPmf(j, kAxisY);
  std::vector<double> joint(static_cast<std::size_t>(fx.num_messages * fy.num_messages), 0.0);
  // I(X^n;Fx,Fy) = H(Fx,Fy) - H(Fy|X^n),  I(Y^n;Fx,Fy) = H(Fx,Fy) - H(Fx|Y^n).
  const double h_fy_given_x = ConditionalMessageEntropy(
      n, px, Conditional(j, /*y_given_x=*/true), ny, fx, fy, &joint, /*outer_is_x=*/true);
  const double h_fx_given_y = ConditionalMessageEntropy(
      n, py, Conditional(j, /*y_given_x=*/false), nx, fy, fx, nullptr, /*outer_is_x=*/false);
  const double h_f = EntropyOfCounts(joint);

  MultiLetterPoint p;
  p.n = n;
  p.rx = fx.rate();
  p.ry = fy.rate();
  p.ix = std::max(0.0, (h_f - h_fy_given_x) / n);
  p.iy = std::max(0.0, (h_f - h_fx_given_y) / n);
  return p;
}

Frontier ExhaustiveFrontier(const JointPmf& j, int n, int mx, int my,
                            std::uint64_t pair_cap) {
  RequireXY(j);
  if (n < 1 || mx < 1 || my < 1) {
    throw Error(ErrorCode::kInvalidArgument, "n, mx and my must be >= 1");
  }
  const std::uint64_t seq_x = SequenceCount(n, j.size_of(kAxisX));
  const std::uint64_t seq_y = SequenceCount(n, j.size_of(kAxisY));
  const std::uint64_t tables_x = SaturatingPow(static_cast<std::uint64_t>(mx), seq_x);
  const std::uint64_t tables_y = SaturatingPow(static_cast<std::uint64_t>(my), seq_y);
  CheckCount(SaturatingMul(tables_x, tables_y), pair_cap, "encoder-pair count");

  auto all_tables = [&](int alphabet, int m, std::uint64_t count) {
    std::vector<EncoderTable> out;
    EncoderTable t;
    t.n = n;
    t.input_alphabet = alphabet;
    t.num_messages = m;
    t.table.assign(SequenceCount(n, alphabet), 0);
    for (std::uint64_t k = 0; k < count; ++k) {
      out.push_back(t);
      for (std::size_t pos = t.table.size(); pos-- > 0;) {
        if (++t.table[pos] < m) break;
        t.table[pos] = 0;
      }
    }
    return out;
  };
  const auto fxs = all_tables(j.size_of(kAxisX), mx, tables_x);
  const auto fys = all_tables(j.size_of(kAxisY), my, tables_y);
  Frontier f;
  std::vector<MultiLetterPoint> pts;
  for (const auto& fx : fxs) {
    for (const auto& fy : fys) {
      pts.push_back(EvaluatePair(j, fx, fy));
      ++f.pairs_evaluated;
    }
  }
  f.points = Dedup(std::move(pts));
  return f;
}

Frontier RandomFrontier(const JointPmf& j, int n, int mx, int my, int trials,
                        std::uint64_t seed) {
  RequireXY(j);
  if (n < 1 || mx < 1 || my < 1 || trials < 0) {
    throw Error(ErrorCode::kInvalidArgument, "n, mx, my must be >= 1 and trials >= 0");
  }
  const int nx = j.size_of(kAxisX);
  const int ny = j.size_of(kAxisY);
  CheckCount(SaturatingMul(SequenceCount(n, nx), SequenceCount(n, ny)), kEnumerationCap,
             "sequence-pair count");
  Rng rng(seed);
  auto draw = [&](int alphabet, int m) {
    EncoderTable t;
    t.n = n;
    t.input_alphabet = alphabet;
    t.num_messages = m;
    t.table.resize(SequenceCount(n, alphabet));
    for (int& v : t.table) v = static_cast<int>(rng.Below(static_cast<std::uint64_t>(m)));
    return t;
  };
  Frontier f;
  for (int t = 0; t < trials; ++t) {
    const EncoderTable fx = draw(nx, mx);
    const EncoderTable fy = draw(ny, my);
    f.points.push_back(EvaluatePair(j, fx, fy));
    ++f.pairs_evaluated;
  }
  return f;
}

EncoderTable MergeMessages(const EncoderTable& f, int into, int from) {
  EncoderTable out = f;
  for (int& m : out.table) {
    if (m == from) m = into;
  }
  return out;
}

}  // namespace infomask
