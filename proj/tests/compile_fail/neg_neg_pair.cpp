// Must not compile: both principals are negative.
#include "inet/reference.hpp"
#include "inet/runtime.hpp"

int main() {
    using namespace inet;
    using namespace inet::sys;
    ref::sequential_runtime rt;
    auto [p1, n1] = new_name<int_ty>();
    auto [p2, n2] = new_name<int_ty>();
    interact(rt, Fib(std::move(n1)), Fib(std::move(n2)));
}
