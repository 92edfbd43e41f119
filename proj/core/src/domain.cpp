namespace jensen {}
