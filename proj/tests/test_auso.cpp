#include <doctest.h>
TEST_SUITE_BEGIN("auso");
TEST_SUITE_END();
