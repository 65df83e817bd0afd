// Copyright 2026 The nilcsp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "nilcsp/generator.hpp"

#include <stdexcept>

namespace nilcsp {

TermGenerator::TermGenerator(std::uint64_t seed, std::size_t size_bound,
                             Alphabet alphabet)
    : rng_(seed), size_bound_(size_bound), alphabet_(std::move(alphabet)) {
  if (size_bound_ == 0) {
    throw std::invalid_argument("size bound must be at least 1");
  }
  if (alphabet_.empty()) {
    throw std::invalid_argument("generator alphabet must be nonempty");
  }
  named_.assign(alphabet_.begin(), alphabet_.end());
}

std::size_t TermGenerator::below(std::size_t n) {
  return n <= 1 ? 0 : static_cast<std::size_t>(rng_() % n);
}

Event TermGenerator::next_named() { return named_[below(named_.size())]; }

Trace TermGenerator::next_raw_trace(std::size_t max_length) {
  Trace t;
  std::size_t n = below(max_length + 1);
  for (std::size_t i = 0; i < n; ++i) {
    switch (below(4)) {
      case 0:
        t.push_back(Event::nil());
        break;
      case 1:
        t.push_back(below(3) == 0 ? Event::tick() : next_named());
        break;
      default:
        t.push_back(next_named());
        break;
    }
  }
  return t;
}

Term TermGenerator::next_surface() {
  binder_counter_ = 0;
  return gen(size_bound_, Scope{});
}

Term TermGenerator::next_surface_tick_free() {
  binder_counter_ = 0;
  Scope scope;
  scope.tick_allowed = false;
  return gen(size_bound_, std::move(scope));
}

std::string TermGenerator::fresh_binder() {
  static constexpr const char* kBase[] = {"X", "Y", "Z", "W"};
  std::string name = kBase[binder_counter_ % 4];
  if (binder_counter_ >= 4) name += std::to_string(binder_counter_ / 4);
  ++binder_counter_;
  return name;
}

Event TermGenerator::pick_event(const Scope& scope, bool allow_nil) {
  // Weights: named 4, nil 2, tick 1.
  std::size_t named_w = 4;
  std::size_t nil_w = allow_nil ? 2 : 0;
  std::size_t tick_w = scope.tick_allowed ? 1 : 0;
  std::size_t r = below(named_w + nil_w + tick_w);
  if (r < named_w) return next_named();
  if (r < named_w + nil_w) return Event::nil();
  return Event::tick();
}

Term TermGenerator::leaf(const Scope& scope) {
  std::vector<const std::string*> guarded;
  for (const auto& [name, is_guarded] : scope.vars) {
    if (is_guarded) guarded.push_back(&name);
  }
  // Prefer recursion when it is available.
  if (!guarded.empty() && below(3) != 0) {
    return Term::var(*guarded[below(guarded.size())]);
  }
  if (scope.tick_allowed && below(3) == 0) return Term::skip();
  return Term::stop();
}

Term TermGenerator::gen(std::size_t budget, Scope scope) {
  if (budget == 0 || below(8) == 0) return leaf(scope);

  // Operators: prefix 5, choice 2, parallel 2, mu 2.
  std::size_t r = below(11);
  std::size_t guard_pool = named_.size() + (scope.tick_allowed ? 1 : 0);
  if (r >= 5 && r < 7 && guard_pool < 2) r = 0;

  auto guarded_scope = [&] {
    Scope s = scope;
    for (auto& v : s.vars) v.second = true;
    return s;
  };

  if (r < 5) {
    Event e = pick_event(scope, true);
    return Term::prefix(std::move(e), gen(budget - 1, guarded_scope()));
  }
  if (r < 7) {
    std::vector<Event> pool = named_;
    if (scope.tick_allowed) pool.push_back(Event::tick());
    std::size_t arity = pool.size() >= 3 && below(3) == 0 ? 3 : 2;
    std::vector<Branch> branches;
    std::size_t remaining = budget - 1;
    Scope inner = guarded_scope();
    for (std::size_t i = 0; i < arity; ++i) {
      std::size_t idx = below(pool.size());
      Event g = pool[idx];
      pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
      std::size_t share = i + 1 == arity ? remaining : below(remaining + 1);
      remaining -= share;
      branches.push_back({std::move(g), gen(share, inner)});
    }
    return Term::choice(std::move(branches));
  }
  if (r < 9) {
    Scope inner;
    inner.tick_allowed = false;
    std::size_t remaining = budget - 1;
    std::size_t left_share = below(remaining + 1);
    Term left = gen(left_share, inner);
    Term right = gen(remaining - left_share, inner);
    return Term::parallel(std::move(left), std::move(right));
  }
  std::string x = fresh_binder();
  Scope inner = scope;
  inner.vars.emplace_back(x, false);
  return Term::mu(x, gen(budget - 1, std::move(inner)));
}

std::vector<Term> gen_terms(std::uint64_t seed, std::size_t size_bound,
                            const Alphabet& alphabet, std::size_t count) {
  TermGenerator g(seed, size_bound, alphabet);
  std::vector<Term> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(g.next());
  return out;
}

}  // namespace nilcsp
