#include "abcat/field.hpp"
int main(int, char**){ return 0; }
