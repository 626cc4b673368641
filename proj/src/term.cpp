#include "nearsemi/term.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace nearsemi {

  Term Term::make(Kind k, std::string name, std::vector<Term> children) {
    return Term(std::make_shared<Node const>(Node{k, std::move(name), std::move(children)}));
  }

  Term Term::var(std::string name) {
    return make(Kind::variable, std::move(name), {});
  }

  Term Term::zero() {
    return make(Kind::zero, "0", {});
  }

  Term Term::one() {
    return make(Kind::one, "1", {});
  }

  Term operator+(Term const& a, Term const& b) {
    return Term::make(Term::Kind::plus, "+", {a, b});
  }

  Term operator*(Term const& a, Term const& b) {
    return Term::make(Term::Kind::times, ".", {a, b});
  }

  Term alpha(Term const& a) {
    return Term::make(Term::Kind::alpha, "a", {a});
  }

  std::vector<std::string> Term::variables() const {
    std::set<std::string>            seen;
    std::function<void(Term const&)> walk = [&](Term const& t) {
      if (t.kind() == Kind::variable) {
        seen.insert(t.name());
      }
      for (auto const& c : t.node_->children) {
        walk(c);
      }
    };
    walk(*this);
    return {seen.begin(), seen.end()};
  }

  std::string Term::to_string() const {
    switch (kind()) {
      case Kind::variable:
        return name();
      case Kind::zero:
        return "0";
      case Kind::one:
        return "1";
      case Kind::plus:
        return "(" + left().to_string() + " + " + right().to_string() + ")";
      case Kind::times:
        return "(" + left().to_string() + "." + right().to_string() + ")";
      case Kind::alpha:
        return left().to_string() + "^a";
    }
    return {};
  }

  Element eval_term(FiniteAlgebra const& alg, Term const& t, Environment const& env) {
    switch (t.kind()) {
      case Term::Kind::variable: {
        auto it = env.find(t.name());
        if (it == env.end()) {
          throw UnboundVariable(t.name());
        }
        if (it->second >= alg.size()) {
          throw StructureError("variable '" + t.name() + "' bound outside the universe");
        }
        return it->second;
      }
      case Term::Kind::zero:
        return alg.zero();
      case Term::Kind::one:
        return alg.one();
      case Term::Kind::plus:
        return alg.plus(eval_term(alg, t.left(), env), eval_term(alg, t.right(), env));
      case Term::Kind::times:
        return alg.times(eval_term(alg, t.left(), env), eval_term(alg, t.right(), env));
      case Term::Kind::alpha:
        return alg.alpha(eval_term(alg, t.left(), env));
    }
    return alg.zero();
  }

  CompiledTerm::CompiledTerm(Term const& t, std::vector<std::string> const& order) : depth_(0) {
    std::size_t                      depth = 0;
    std::function<void(Term const&)> emit  = [&](Term const& s) {
      switch (s.kind()) {
        case Term::Kind::variable: {
          auto it = std::find(order.begin(), order.end(), s.name());
          if (it == order.end()) {
            throw UnboundVariable(s.name());
          }
          code_.push_back({s.kind(), static_cast<unsigned>(it - order.begin())});
          ++depth;
          break;
        }
        case Term::Kind::zero:
        case Term::Kind::one:
          code_.push_back({s.kind(), 0});
          ++depth;
          break;
        case Term::Kind::plus:
        case Term::Kind::times:
          emit(s.left());
          emit(s.right());
          code_.push_back({s.kind(), 0});
          --depth;
          break;
        case Term::Kind::alpha:
          emit(s.left());
          code_.push_back({s.kind(), 0});
          break;
      }
      depth_ = std::max(depth_, depth);
    };
    emit(t);
  }

  Element CompiledTerm::eval(FiniteAlgebra const& alg, std::span<Element const> values) const {
    // Terms used here are shallow; a fixed stack avoids allocation in the
    // exhaustive loops.
    Element     small[64] = {};
    std::vector<Element> big;
    Element*    stack = small;
    if (depth_ > 64) {
      big.resize(depth_);
      stack = big.data();
    }
    std::size_t sp = 0;
    for (auto const& op : code_) {
      switch (op.kind) {
        case Term::Kind::variable:
          stack[sp++] = values[op.var];
          break;
        case Term::Kind::zero:
          stack[sp++] = alg.zero();
          break;
        case Term::Kind::one:
          stack[sp++] = alg.one();
          break;
        case Term::Kind::plus:
          --sp;
          stack[sp - 1] = alg.plus(stack[sp - 1], stack[sp]);
          break;
        case Term::Kind::times:
          --sp;
          stack[sp - 1] = alg.times(stack[sp - 1], stack[sp]);
          break;
        case Term::Kind::alpha:
          stack[sp - 1] = alg.alpha(stack[sp - 1]);
          break;
      }
    }
    return stack[0];
  }

  std::string IdentityWitness::describe(FiniteAlgebra const& alg) const {
    std::string out;
    for (auto const& [var, val] : assignment) {
      if (!out.empty()) {
        out += ", ";
      }
      out += var + "=" + alg.name(val);
    }
    return out + " (lhs " + alg.name(lhs) + ", rhs " + alg.name(rhs) + ")";
  }

  std::optional<IdentityWitness> check_identity(FiniteAlgebra const& alg, Identity const& id) {
    std::set<std::string> vars;
    for (auto const& v : id.lhs.variables()) {
      vars.insert(v);
    }
    for (auto const& v : id.rhs.variables()) {
      vars.insert(v);
    }
    std::vector<std::string> order(vars.begin(), vars.end());
    CompiledTerm const       lhs(id.lhs, order);
    CompiledTerm const       rhs(id.rhs, order);

    std::size_t const    n = alg.size();
    std::vector<Element> values(order.size(), 0);
    while (true) {
      Element const l = lhs.eval(alg, values);
      Element const r = rhs.eval(alg, values);
      if (l != r) {
        IdentityWitness w{{}, l, r};
        for (std::size_t i = 0; i < order.size(); ++i) {
          w.assignment.emplace_back(order[i], values[i]);
        }
        return w;
      }
      // odometer, first variable fastest
      std::size_t i = 0;
      while (i < values.size() && ++values[i] == n) {
        values[i++] = 0;
      }
      if (i == values.size()) {
        break;
      }
    }
    return std::nullopt;
  }

  namespace terms {
    Term x() {
      return Term::var("x");
    }
    Term y() {
      return Term::var("y");
    }
    Term z() {
      return Term::var("z");
    }

    Term church_q(Term const& x, Term const& y, Term const& z) {
      return (x * y) + (alpha(x) * z);
    }

    Term malcev(Term const& x, Term const& y, Term const& z) {
      return alpha((alpha(x * alpha(y)) * alpha(z)) + (alpha(z * alpha(y)) * alpha(x)));
    }

    Term gumm_ursini(Term const& x, Term const& y) {
      return alpha(x) * y;
    }
  }  // namespace terms

}  // namespace nearsemi
