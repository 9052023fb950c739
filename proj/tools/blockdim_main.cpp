#include "blockdim/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  blockdim::JobSpec job;
  if (auto code = blockdim::parse_job(argc, argv, job, std::cout, std::cerr)) return *code;
  return blockdim::run(job, std::cout, std::cerr);
}
