#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include "polyhodge/real.hpp"

int main(int argc, char** argv) {
    polyhodge::set_working_precision(polyhodge::kDefaultPrecisionBits);
    doctest::Context context(argc, argv);
    return context.run();
}
