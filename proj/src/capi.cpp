extern "C" int qgt_placeholder() { return 0; }
