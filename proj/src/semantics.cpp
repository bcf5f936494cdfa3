#include "scalc/semantics.hpp"

#include <string>

#include "scalc/error.hpp"

namespace scalc {

namespace {

void require_size(std::size_t expected, std::size_t actual, const char* what) {
  if (expected != actual) {
    throw Error(ErrorKind::SpaceMismatch,
                std::string(what) + " over " + std::to_string(actual) +
                    " states, expected " + std::to_string(expected));
  }
}

}  // namespace

Relation denote_nop(std::size_t size) { return Relation::identity(size); }

Relation denote_assign(std::string_view var, const ArithExpr& e, const StateSpace& space) {
  const std::size_t slot = space.universe().index_of(var);
  const Domain& domain = space.universe()[slot].domain;
  const ArithExpr r = resolve(e, space.universe());
  RelationBuilder b(space.size());
  for (std::size_t x = 0; x < space.size(); ++x) {
    auto v = eval_arith_at(r, space, x);
    std::optional<std::size_t> pos;
    if (v) pos = domain.position(*v);
    if (pos) {
      const StateIndex y = static_cast<StateIndex>(space.with_value(x, slot, *pos));
      b.add_sorted_row({&y, 1});
    } else {
      b.add_sorted_row({});
    }
  }
  return std::move(b).finish();
}

Relation denote_decl(std::string_view var, const StateSpace& space) {
  const std::size_t slot = space.universe().index_of(var);
  const std::size_t width = space.universe()[slot].domain.size();
  RelationBuilder b(space.size());
  std::vector<StateIndex> row(width);
  for (std::size_t x = 0; x < space.size(); ++x) {
    // with_value is increasing in the domain position, so rows come out sorted.
    for (std::size_t p = 0; p < width; ++p) {
      row[p] = static_cast<StateIndex>(space.with_value(x, slot, p));
    }
    b.add_sorted_row(row);
  }
  return std::move(b).finish();
}

Relation denote_ite(const PredSet& guard, const Relation& r1, const Relation& r2) {
  require_size(guard.size(), r1.size(), "then-branch relation");
  require_size(guard.size(), r2.size(), "else-branch relation");
  RelationBuilder b(guard.size());
  for (std::size_t x = 0; x < guard.size(); ++x) {
    b.add_sorted_row(guard.test(x) ? r1.successors(x) : r2.successors(x));
  }
  return std::move(b).finish();
}

Relation denote_if(const PredSet& guard, const Relation& r) {
  return denote_ite(guard, r, denote_nop(guard.size()));
}

Relation denote_seq(const Relation& r1, const Relation& r2) {
  require_size(r1.size(), r2.size(), "second relation");
  const std::size_t n = r1.size();
  RelationBuilder b(n);
  std::vector<std::uint32_t> seen(n, 0);
  std::uint32_t stamp = 0;
  std::vector<StateIndex> row;
  for (std::size_t x = 0; x < n; ++x) {
    ++stamp;
    row.clear();
    for (auto z : r1.successors(x)) {
      for (auto y : r2.successors(z)) {
        if (seen[y] != stamp) {
          seen[y] = stamp;
          row.push_back(y);
        }
      }
    }
    b.add_row(row);
  }
  return std::move(b).finish();
}

Relation denote_while(const PredSet& guard, const Relation& body) {
  require_size(guard.size(), body.size(), "loop body relation");
  const std::size_t n = guard.size();
  RelationBuilder b(n);
  std::vector<std::uint32_t> visited(n, 0);
  std::vector<std::uint32_t> exited(n, 0);
  std::uint32_t stamp = 0;
  std::vector<StateIndex> queue;
  std::vector<StateIndex> row;
  for (std::size_t x = 0; x < n; ++x) {
    if (!guard.test(x)) {
      const StateIndex self = static_cast<StateIndex>(x);
      b.add_sorted_row({&self, 1});
      continue;
    }
    ++stamp;
    row.clear();
    queue.assign(1, static_cast<StateIndex>(x));
    visited[x] = stamp;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (auto d : body.successors(queue[head])) {
        if (!guard.test(d)) {
          if (exited[d] != stamp) {
            exited[d] = stamp;
            row.push_back(d);
          }
        } else if (visited[d] != stamp) {
          visited[d] = stamp;
          queue.push_back(d);
        }
      }
    }
    b.add_row(row);
  }
  return std::move(b).finish();
}

Relation denote(const Stmt& s, const StateSpace& space) {
  using K = Stmt::Kind;
  switch (s.kind) {
    case K::Nop: return denote_nop(space);
    case K::Decl: return denote_decl(s.var, space);
    case K::Assign: return denote_assign(s.var, s.expr, space);
    case K::Seq: return denote_seq(denote(s.body[0], space), denote(s.body[1], space));
    case K::IfThenElse:
      return denote_ite(pred_to_set(s.cond, space), denote(s.body[0], space),
                        denote(s.body[1], space));
    case K::IfThen: return denote_if(pred_to_set(s.cond, space), denote(s.body[0], space));
    case K::While: return denote_while(pred_to_set(s.cond, space), denote(s.body[0], space));
  }
  return denote_nop(space);
}

}  // namespace scalc
