function spawnWorkers(count, blob) {
  var workers = [];
  for (var i = 0; i < count; i++) {
    var w = new Worker("grind.js");
    w.postMessage({ blob: blob, stride: count, offset: i });
    workers.push(w);
  }
  return workers;
}

function stopAll(workers) {
  while (workers.length > 0) {
    var w = workers.pop();
    w.terminate();
  }
}
