# spinduality package
